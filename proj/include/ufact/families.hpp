#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ufact/language_spec.hpp"
#include "ufact/oracle.hpp"
#include "ufact/words.hpp"

namespace ufact {

/// A checkable property of a generated language; `check` fills `detail`
/// with evidence either way.
struct FamilyClaim {
  std::string description;
  std::function<bool(std::string& detail)> check;
};

/// A concrete language from the literature together with its claims.
struct FamilyInstance {
  std::string name;
  std::optional<int> parameter;
  LanguageSpec language;
  std::vector<FamilyClaim> claims;
};

/// b(aⁿ)* ∪ (aⁿ⁺¹)*b: an O(n)-state regular non-code whose shortest
/// ambiguous word is b a^{n(n+1)} b of length n²+n+2. n ≥ 2.
FamilyInstance prop3_family(int n);

/// The 2n-word finite non-code {a₁,aₙ} ∪ {bⁱaᵢ₊₁} ∪ {aᵢbⁱ} over n+1
/// letters; shortest ambiguous word a₁ b a₂ b² ⋯ aₙ of length n(n+1)/2.
FamilyInstance prop5_family(int n);

/// prop5 recoded over {0,1,b}: each aᵢ becomes the base-2 representation
/// of i, zero-padded to a fixed block width. Still a non-code with a
/// quadratic-length witness (measured, not asserted from a formula).
FamilyInstance prop5_recoded(int n);

/// a0⁺b + 1 + c(23)⁺ + 23d + a + 0 + b1⁺c(23)⁺ + a0⁺b1⁺c2 + 32 + 3d over
/// eight letters; the su(L) witness language.
FamilyInstance thm8_language();

/// The 29-word finite language L₁ ∪ L₂ ∪ L₃ over 21 letters; the finite
/// su(L) witness.
FamilyInstance thm9_language();

/// {aa, aaa, ab, ac, ba, ca}: the finite ufp(L) witness.
FamilyInstance bell_language();

/// (ab)⁺(ac)⁺aa + (ba)⁺(ca)⁺ + aa + aaa: the regular ufs(L) witness.
FamilyInstance ufs_regular_language();

/// Homomorphic image over {a,b} mapping the i-th declared letter (1-based)
/// to b aⁱ b. Injective on words, so factorization counts transfer.
LanguageSpec binary_recode(const LanguageSpec& finite_spec);
Word binary_recode_word(const Word& w);

std::vector<std::string> family_names();
bool family_is_parametric(const std::string& name);

/// Instantiates `name`; `n` is ignored for the fixed families.
FamilyInstance make_family(const std::string& name, int n);

// Target-word builders shared by the engine checks and the tests.

/// b a^{n(n+1)} b over prop3's alphabet.
Word prop3_ambiguous_word(int n);

/// a₁ b a₂ b² ⋯ a_{n−1} b^{n−1} aₙ over prop5's alphabet.
Word prop5_ambiguous_word(int n);

/// a 0^i b 1^j c (23)^{k+1} d: the thm8 target with factorization term
/// counts {i+3, j+3, k+2}.
Word thm8_target_word(int i, int j, int k);

/// 0 (abcd)^m 127 (efgh)^n 34 (ijkl)^p 568.
Word thm9_target_word(int m, int n, int p);

/// aa (ab)^r (ac)^s aa (ba)^t (ca)^q aaa over {a,b,c}.
Word bell_target_word(int r, int s, int t, int q);

/// aa·(ab)^r·(ac)^s·aa·(ba)^t·(ca)^q·aaa as bell factors.
Factorization bell_factorization_shape_one(int r, int s, int t, int q);

/// aaa·(ba)^r·(ca)^s·(ab)^t·(ac)^q·aa·aa as bell factors.
Factorization bell_factorization_shape_two(int r, int s, int t, int q);

}  // namespace ufact
