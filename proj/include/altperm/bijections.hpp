#pragma once

#include "altperm/permutation.hpp"
#include "altperm/tableau.hpp"
#include "altperm/word.hpp"

namespace altperm {

/// The avoided pattern shared by every map below.
const Permutation& pattern_4123();

// Every forward map validates its domain (alternation class, parity,
// 4123-avoidance) up front and throws DomainError naming the failed check.
// Every inverse validates codomain membership the same way.

/// DU_{2n}(4123) -> Yamanouchi words of type (n,n,n), with alpha(w) = first
/// entry and stat_B(w) = stat_A(p).
Word phi(const Permutation& p);
Permutation phi_inverse(const Word& w);

/// DU_{2n-1}(4123) -> skew Yamanouchi words of type (n-1,n,n+1); same
/// recursive step as phi over the base 1 -> 233.
Word psi(const Permutation& p);
Permutation psi_inverse(const Word& w);

/// DU_{2n}(4123) -> SYT of shape (n,n,n) via chi^{-1} o rc o phi.
Tableau phi_bar(const Permutation& p);
Permutation phi_bar_inverse(const Tableau& t);

/// DU_{2n-1}(4123) -> shifted SYT of shape (n+1,n,n-1) via chi^{-1} o rc o psi.
Tableau psi_bar(const Permutation& p);
Permutation psi_bar_inverse(const Tableau& t);

/// UD_{2n+1}(4123) -> SYT of shape (n+1,n,n-1), n >= 1.
Tableau gamma(const Permutation& p);
Permutation gamma_inverse(const Tableau& t);

/// UD_{2n}(4123) -> shifted SYT of shape (n+2,n,n-2), n >= 2.
Tableau delta(const Permutation& p);
Permutation delta_inverse(const Tableau& t);

}  // namespace altperm
