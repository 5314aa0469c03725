namespace gamma_forms {
namespace detail {

// Euler's constant, 400 decimal places. Vendored data asset, identical to
// core/data/gamma_digits.txt; regenerated and cross-checked by the
// Euler-Maclaurin oracle in tests/oracles.hpp at two independent parameter
// sets (N = 10^6, m = 40 and N = 8*10^5, m = 42, enclosure radii < 1e-430).
extern const char* const kGammaDigits;
const char* const kGammaDigits =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467"
    "09369470632917467495146314472498070824809605040144865428362241739976449235362535"
    "00333742937337737673942792595258247094916008735203948165670853233151776611528621"
    "19950150798479374508570574002992135478614669402960432542151905877553526733139925"
    "40129674205137541395491116851028079842348775872050384310939973613725530608893312";

}  // namespace detail
}  // namespace gamma_forms
