//! Permutations of `{1, …, r}` and the statistics used for `d_rs` terms.

use std::fmt;

use serde::{Serialize, Serializer};

/// A permutation stored as its image list: `self.0[j-1] = σ(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(r: usize) -> Self {
        Perm((1..=r).collect())
    }

    /// Validates an image list.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &x in &images {
            if x == 0 || x > r || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    /// `(1 2 … r)^s`, i.e. `j ↦ j + s` modulo `r` (on `1..=r`).
    pub fn cycle_power(r: usize, s: usize) -> Self {
        Perm((1..=r).map(|j| (j - 1 + s) % r + 1).collect())
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// `σ(j)`, 1-based.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    /// All permutations of `{1..r}` in lexicographic order of image lists.
    pub fn all(r: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (1..=r).collect();
        let mut out = vec![Perm(cur.clone())];
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Perm(cur.clone()));
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .flat_map(|a| (a + 1..v.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| v[a] > v[b])
            .count()
    }

    /// `Σ_j |σ(j) − j|`.
    pub fn height(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &x)| x.abs_diff(j + 1))
            .sum()
    }

    /// Points moved down, `σ(j) < j`.
    pub fn drops(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(j, &x)| x < j + 1)
            .count()
    }

    /// Points moved up, `σ(j) > j`.
    pub fn jumps(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(j, &x)| x > j + 1)
            .count()
    }

    pub fn fixed_points(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(j, &x)| x == j + 1)
            .count()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_points() == 0
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let r = self.r();
        let mut seen = vec![false; r + 1];
        let mut out = Vec::new();
        for start in 1..=r {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, e.g. `(13)(24)`; `()` for the identity. Entries are
    /// comma-separated once `r ≥ 10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.r() >= 10 { "," } else { "" };
        for c in cycles {
            let items: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", items.join(sep))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_stats() {
        assert_eq!(Perm::all(4).len(), 24);
        let p = Perm(vec![3, 4, 1, 2]);
        assert_eq!(p.to_string(), "(13)(24)");
        assert_eq!(p.height(), 8);
        assert_eq!(p.length(), 4);
        assert!(p.is_derangement());
        let c = Perm::cycle_power(5, 2);
        assert_eq!(c.height(), 12);
        assert_eq!(c.drops() + c.jumps() + c.fixed_points(), 5);
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm::cycle_power(4, 1).to_string(), "(1234)");
        assert!(Perm::from_images(vec![1, 1]).is_none());
    }
}
