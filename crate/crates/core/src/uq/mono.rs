//! Internal monomials over the triangular generators.
//!
//! A [`TMono`] is an ordered product
//! `t_{j1 i1}^{a_1} ⋯ t_{jM iM}^{a_M} · K_1^{μ_1} ⋯ K_N^{μ_N} · t̄_{i1 j1}^{b_1} ⋯ t̄_{iM jM}^{b_M}`
//! with both off-diagonal blocks ordered by root position. It corresponds to
//! exactly one Chevalley PBW monomial up to a nonzero scalar (see
//! `element.rs`), which is why the engine works in this basis throughout.

/// Exponents laid out as `[L (M entries) | K (N entries) | U (M entries)]`.
/// The total length is `N²`, so the rank is recoverable from the vector alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct TMono(pub Vec<i32>);

pub(crate) fn rank_of_len(len: usize) -> usize {
    let n = (len as f64).sqrt().round() as usize;
    debug_assert_eq!(n * n, len);
    n
}

impl TMono {
    pub fn one(n: usize) -> Self {
        TMono(vec![0; n * n])
    }

    pub fn n(&self) -> usize {
        rank_of_len(self.0.len())
    }

    fn m(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    pub fn l(&self) -> &[i32] {
        &self.0[..self.m()]
    }

    pub fn k(&self) -> &[i32] {
        let m = self.m();
        &self.0[m..m + self.n()]
    }

    pub fn u(&self) -> &[i32] {
        let m = self.m();
        &self.0[m + self.n()..]
    }

    pub fn from_parts(l: &[i32], k: &[i32], u: &[i32]) -> Self {
        let mut v = Vec::with_capacity(l.len() + k.len() + u.len());
        v.extend_from_slice(l);
        v.extend_from_slice(k);
        v.extend_from_slice(u);
        TMono(v)
    }

    pub fn is_k_only(&self) -> bool {
        self.l().iter().all(|&x| x == 0) && self.u().iter().all(|&x| x == 0)
    }
}

pub(crate) fn first_nonzero(v: &[i32]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

pub(crate) fn last_nonzero(v: &[i32]) -> Option<usize> {
    v.iter().rposition(|&x| x != 0)
}

pub(crate) fn add_vec(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
