//! The variables `X_mi`, the group `G = ∏ W_m` and the monoid `M ≅ Z^{N(N−1)/2}`,
//! together with their actions on `L = Frac(Λ)`.

use std::fmt;

use serde::Serialize;

use super::GaloisError;
use crate::perm::Perm;
use crate::scalar::{LaurentPoly, RatFun};

/// Position of `X_mi` among the variables of `Λ`, levels first.
pub fn var_index(m: usize, i: usize) -> usize {
    m * (m - 1) / 2 + i - 1
}

/// Number of variables `X_mi`, `1 ≤ i ≤ m ≤ n`.
pub fn num_vars(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn x_var(n: usize, m: usize, i: usize) -> LaurentPoly {
    LaurentPoly::var(num_vars(n), var_index(m, i))
}

pub fn x_var_pow(n: usize, m: usize, i: usize, k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(num_vars(n), var_index(m, i), k)
}

/// `X[m,i]` names in variable order, for display.
pub fn var_names(n: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|m| (1..=m).map(move |i| format!("X[{m},{i}]")))
        .collect()
}

/// One factor `ζ_m α_m ∈ W_m = S_m ⋉ E_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Level {
    pub zeta: Perm,
    pub alpha: Vec<u8>,
}

/// `g = (ζ_1 α_1, …, ζ_N α_N)` acting by `X_mi ↦ (−1)^{α_mi} X_{m ζ_m(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    levels: Vec<Level>,
}

impl GroupElem {
    pub fn identity(n: usize) -> Self {
        GroupElem {
            levels: (1..=n)
                .map(|m| Level {
                    zeta: Perm::identity(m),
                    alpha: vec![0; m],
                })
                .collect(),
        }
    }

    pub fn new(levels: Vec<Level>) -> Result<Self, GaloisError> {
        for (idx, l) in levels.iter().enumerate() {
            let m = idx + 1;
            if l.zeta.r() != m || l.alpha.len() != m {
                return Err(GaloisError::InvalidGroupElem(format!(
                    "level {m} has the wrong size"
                )));
            }
            if l.alpha.iter().any(|&a| a > 1) {
                return Err(GaloisError::InvalidGroupElem(format!(
                    "level {m}: signs must be 0 or 1"
                )));
            }
            if l.alpha.iter().map(|&a| a as u32).sum::<u32>() % 2 != 0 {
                return Err(GaloisError::InvalidGroupElem(format!(
                    "level {m}: odd number of sign changes"
                )));
            }
        }
        Ok(GroupElem { levels })
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, m: usize) -> &Level {
        &self.levels[m - 1]
    }

    /// `self ∘ other` as automorphisms of `L`.
    pub fn compose(&self, other: &Self) -> Self {
        let levels = self
            .levels
            .iter()
            .zip(&other.levels)
            .map(|(g, h)| {
                let m = g.zeta.r();
                Level {
                    zeta: Perm((1..=m).map(|i| g.zeta.apply(h.zeta.apply(i))).collect()),
                    alpha: (1..=m)
                        .map(|i| (h.alpha[i - 1] + g.alpha[h.zeta.apply(i) - 1]) % 2)
                        .collect(),
                }
            })
            .collect();
        GroupElem { levels }
    }

    pub fn inverse(&self) -> Self {
        let levels = self
            .levels
            .iter()
            .map(|g| {
                let m = g.zeta.r();
                let mut inv = vec![0; m];
                for i in 1..=m {
                    inv[g.zeta.apply(i) - 1] = i;
                }
                let alpha = (1..=m).map(|j| g.alpha[inv[j - 1] - 1]).collect();
                Level {
                    zeta: Perm(inv),
                    alpha,
                }
            })
            .collect();
        GroupElem { levels }
    }

    /// Generators of `G`: the adjacent transpositions of each level and the
    /// sign change of the first two coordinates of each level `m ≥ 2`.
    pub fn generators(n: usize) -> Vec<(String, GroupElem)> {
        let mut out = Vec::new();
        for m in 2..=n {
            for k in 1..m {
                let mut g = Self::identity(n);
                g.levels[m - 1].zeta.0.swap(k - 1, k);
                out.push((format!("s[{m}]_{k}"), g));
            }
            let mut g = Self::identity(n);
            g.levels[m - 1].alpha[0] = 1;
            g.levels[m - 1].alpha[1] = 1;
            out.push((format!("eps[{m}]_12"), g));
        }
        out
    }

    fn substitution(&self) -> (Vec<usize>, Vec<bool>) {
        let n = self.n();
        let mut target = vec![0; num_vars(n)];
        let mut negate = vec![false; num_vars(n)];
        for (idx, l) in self.levels.iter().enumerate() {
            let m = idx + 1;
            for i in 1..=m {
                target[var_index(m, i)] = var_index(m, l.zeta.apply(i));
                negate[var_index(m, i)] = l.alpha[i - 1] == 1;
            }
        }
        (target, negate)
    }

    pub fn act_poly(&self, f: &LaurentPoly) -> LaurentPoly {
        let (target, negate) = self.substitution();
        f.substitute_signed(&target, &negate)
    }

    /// `g · m · g^{-1}` for `m ∈ M`: the exponent of `δ^{mi}` moves to `δ^{m ζ_m(i)}`.
    pub fn conjugate(&self, x: &MonoidElem) -> MonoidElem {
        let mut coords = vec![0; x.coords.len()];
        for m in 1..x.n {
            let zeta = &self.levels[m - 1].zeta;
            for i in 1..=m {
                coords[var_index(m, zeta.apply(i))] = x.coords[var_index(m, i)];
            }
        }
        MonoidElem { n: x.n, coords }
    }
}

pub fn act_g(g: &GroupElem, f: &RatFun) -> RatFun {
    let (target, negate) = g.substitution();
    f.map_vars(|p| p.substitute_signed(&target, &negate))
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .levels
            .iter()
            .map(|l| {
                let signs: String = l
                    .alpha
                    .iter()
                    .map(|a| if *a == 1 { '-' } else { '+' })
                    .collect();
                format!("{}{}", l.zeta, signs)
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `Σ x_mi δ^{mi}` written additively, `1 ≤ i ≤ m ≤ N−1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonoidElem {
    n: usize,
    coords: Vec<i32>,
}

impl MonoidElem {
    pub fn zero(n: usize) -> Self {
        MonoidElem {
            n,
            coords: vec![0; n * n.saturating_sub(1) / 2],
        }
    }

    /// `δ^{mi}`.
    pub fn delta(n: usize, m: usize, i: usize) -> Result<Self, GaloisError> {
        if m == 0 || m >= n || i == 0 || i > m {
            return Err(GaloisError::InvalidIndex(format!("δ^({m},{i}) for N={n}")));
        }
        let mut x = Self::zero(n);
        x.coords[var_index(m, i)] = 1;
        Ok(x)
    }

    pub fn from_coords(n: usize, coords: Vec<i32>) -> Result<Self, GaloisError> {
        if coords.len() != n * n.saturating_sub(1) / 2 {
            return Err(GaloisError::InvalidIndex(format!(
                "{} monoid coordinates for N={n}",
                coords.len()
            )));
        }
        Ok(MonoidElem { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn coord(&self, m: usize, i: usize) -> i32 {
        self.coords[var_index(m, i)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        MonoidElem {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        MonoidElem {
            n: self.n,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i32) -> Self {
        MonoidElem {
            n: self.n,
            coords: self.coords.iter().map(|a| k * a).collect(),
        }
    }

    /// `q`-exponents of the rescaling `X_mi ↦ q^{−x_mi} X_mi`, one per variable of `Λ`.
    fn powers(&self) -> Vec<i32> {
        let mut p: Vec<i32> = self.coords.iter().map(|c| -c).collect();
        p.resize(num_vars(self.n), 0);
        p
    }

    pub fn act_poly(&self, f: &LaurentPoly) -> LaurentPoly {
        f.scale_vars(&self.powers())
    }
}

pub fn act_m(x: &MonoidElem, f: &RatFun) -> RatFun {
    if x.is_zero() {
        return f.clone();
    }
    let powers = x.powers();
    f.map_vars(|p| p.scale_vars(&powers))
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for m in 1..self.n {
            for i in 1..=m {
                match self.coord(m, i) {
                    0 => {}
                    1 => parts.push(format!("d[{m},{i}]")),
                    c => parts.push(format!("{c}d[{m},{i}]")),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}
