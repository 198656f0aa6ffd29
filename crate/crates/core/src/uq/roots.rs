/// A positive root `β_ij = ε_i − ε_j` (`i < j`, 1-based) together with its
/// position in the fixed enumeration `β_12, β_13, …, β_1N, β_23, …, β_{N−1,N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex {
    pub i: usize,
    pub j: usize,
    pub pos: usize,
}

impl RootIndex {
    pub fn height(&self) -> usize {
        self.j - self.i
    }
}

/// The positive roots of `gl_N` in enumeration order.
#[derive(Clone, Debug)]
pub struct Roots {
    n: usize,
    list: Vec<RootIndex>,
}

impl Roots {
    pub fn new(n: usize) -> Self {
        let mut list = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                list.push(RootIndex {
                    i,
                    j,
                    pos: list.len(),
                });
            }
        }
        Roots { n, list }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of positive roots, `N(N−1)/2`.
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, pos: usize) -> RootIndex {
        self.list[pos]
    }

    pub fn iter(&self) -> impl Iterator<Item = RootIndex> + '_ {
        self.list.iter().copied()
    }

    /// Position of `β_ij`; `None` unless `1 ≤ i < j ≤ N`.
    pub fn pos(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || i >= j || j > self.n {
            return None;
        }
        // rows 1..i-1 contribute (n-1) + (n-2) + ... + (n-i+1) roots
        let before: usize = (1..i).map(|a| self.n - a).sum();
        Some(before + (j - i - 1))
    }

    /// `(β_a, β_b)` for the form with `(ε_i, ε_j) = δ_ij`.
    pub fn pairing(&self, a: usize, b: usize) -> i32 {
        let x = self.list[a];
        let y = self.list[b];
        let d = |u: usize, v: usize| i32::from(u == v);
        d(x.i, y.i) - d(x.i, y.j) - d(x.j, y.i) + d(x.j, y.j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order() {
        let r = Roots::new(4);
        let pairs: Vec<(usize, usize)> = r.iter().map(|x| (x.i, x.j)).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        for x in r.iter() {
            assert_eq!(r.pos(x.i, x.j), Some(x.pos));
        }
        assert_eq!(r.pos(2, 2), None);
        assert_eq!(r.pos(1, 5), None);
    }

    #[test]
    fn pairing_values() {
        let r = Roots::new(3);
        let b12 = r.pos(1, 2).unwrap();
        let b13 = r.pos(1, 3).unwrap();
        let b23 = r.pos(2, 3).unwrap();
        assert_eq!(r.pairing(b12, b12), 2);
        assert_eq!(r.pairing(b12, b23), -1);
        assert_eq!(r.pairing(b12, b13), 1);
    }
}
