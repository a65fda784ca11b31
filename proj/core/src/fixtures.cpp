#include "bruhat/fixtures.hpp"

namespace bruhat {

Word coxeter_power(int rank, int times) {
  Word out;
  for (int k = 0; k < times; ++k) {
    for (int i = 0; i < rank; ++i) out.push_back(i);
  }
  return out;
}

Fixture e_w0_fixture(const TypeLabel& label) {
  auto cartan = cartan_matrix(label);
  Word v;
  switch (label.family) {
    case Family::B:
    case Family::C: v = coxeter_power(label.rank, label.rank); break;
    case Family::F: v = coxeter_power(4, 6); break;
    case Family::G: v = coxeter_power(2, 3); break;
    default: v = longest_element(cartan); break;
  }
  auto word = make_signed_word({}, v, default_pattern(0, v.size()), cartan);
  return Fixture{std::move(cartan), {}, std::move(v), std::move(word)};
}

SigmaGraph fixture_sigma(const Fixture& fixture) {
  return build_sigma(fixture.word, fixture.cartan, standard_split(fixture.cartan));
}

}  // namespace bruhat
