//! Derivation of the quadratic straightening rules from the RTT relations.
//!
//! Every product of two generators that is out of PBW order is an unknown;
//! every instance of the three exchange relations is a linear equation among
//! such products and ordered ones. Solving the system over `Q(q)` expresses
//! each out-of-order product as a combination of ordered monomials. A rank
//! deficit or an inconsistent equation is a bug in the relation table and
//! aborts the derivation.

use std::collections::{BTreeMap, HashMap};

use super::mono::TMono;
use super::roots::Roots;
use crate::scalar::QScalar;

/// One letter of the internal alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Letter {
    /// `t_ji`, `j > i`, by root position.
    L(usize),
    /// `K_i^{±1}` (0-based index, sign of the exponent).
    K(usize, i32),
    /// `t̄_ij`, `i < j`, by root position.
    U(usize),
}

impl Letter {
    fn class(self) -> u8 {
        match self {
            Letter::L(_) => 0,
            Letter::K(..) => 1,
            Letter::U(_) => 2,
        }
    }

    /// Whether `self · other` is already in PBW order.
    pub fn ordered_before(self, other: Letter) -> bool {
        match (self, other) {
            (Letter::L(a), Letter::L(b)) | (Letter::U(a), Letter::U(b)) => a <= b,
            (Letter::K(..), Letter::K(..)) => true,
            _ => self.class() < other.class(),
        }
    }

    pub fn add_to(self, mono: &mut TMono, times: i32) {
        let n = mono.n();
        let m = n * (n - 1) / 2;
        match self {
            Letter::L(p) => mono.0[p] += times,
            Letter::K(i, s) => mono.0[m + i] += s * times,
            Letter::U(p) => mono.0[m + n + p] += times,
        }
    }
}

/// A generator `t_ab` (`bar == false`) or `t̄_ab` (`bar == true`), 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Sym {
    pub a: usize,
    pub b: usize,
    pub bar: bool,
}

impl Sym {
    /// The letter this generator denotes, or `None` when it is identically zero.
    pub fn letter(self, roots: &Roots) -> Option<Letter> {
        let (a, b) = (self.a, self.b);
        match (self.bar, a.cmp(&b)) {
            (_, std::cmp::Ordering::Equal) => Some(Letter::K(a - 1, if self.bar { -1 } else { 1 })),
            (false, std::cmp::Ordering::Greater) => Some(Letter::L(roots.pos(b, a)?)),
            (true, std::cmp::Ordering::Less) => Some(Letter::U(roots.pos(a, b)?)),
            _ => None,
        }
    }
}

pub(crate) type Terms = Vec<(QScalar, TMono)>;

#[derive(Default)]
struct Row {
    unk: BTreeMap<usize, QScalar>,
    known: HashMap<TMono, QScalar>,
}

impl Row {
    fn is_trivial(&self) -> bool {
        self.unk.is_empty() && self.known.is_empty()
    }

    fn axpy(&mut self, c: &QScalar, other: &Row) {
        for (k, v) in &other.unk {
            let e = self.unk.entry(*k).or_insert_with(QScalar::zero);
            *e = &*e + &(c * v);
            if e.is_zero() {
                self.unk.remove(k);
            }
        }
        for (k, v) in &other.known {
            let e = self.known.entry(k.clone()).or_insert_with(QScalar::zero);
            *e = &*e + &(c * v);
            if e.is_zero() {
                self.known.remove(k);
            }
        }
    }

    fn scale(&mut self, c: &QScalar) {
        for v in self.unk.values_mut() {
            *v = &*v * c;
        }
        for v in self.known.values_mut() {
            *v = &*v * c;
        }
    }
}

pub(crate) struct Rules {
    pub table: HashMap<(Letter, Letter), Terms>,
}

pub(crate) fn derive(n: usize) -> Rules {
    let roots = Roots::new(n);
    let mut unknowns: HashMap<(Letter, Letter), usize> = HashMap::new();
    let mut names: Vec<(Letter, Letter)> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();

    let qd = QScalar::q_diff();
    let delta = |x: usize, y: usize| i32::from(x == y);

    let mut push_word = |row: &mut Row, c: QScalar, x: Sym, y: Sym| {
        if c.is_zero() {
            return;
        }
        let (Some(lx), Some(ly)) = (x.letter(&roots), y.letter(&roots)) else {
            return;
        };
        if lx.ordered_before(ly) {
            let mut mono = TMono::one(n);
            lx.add_to(&mut mono, 1);
            ly.add_to(&mut mono, 1);
            let e = row.known.entry(mono.clone()).or_insert_with(QScalar::zero);
            *e = &*e + &c;
            if e.is_zero() {
                row.known.remove(&mono);
            }
        } else {
            let idx = *unknowns.entry((lx, ly)).or_insert_with(|| {
                names.push((lx, ly));
                names.len() - 1
            });
            let e = row.unk.entry(idx).or_insert_with(QScalar::zero);
            *e = &*e + &c;
            if e.is_zero() {
                row.unk.remove(&idx);
            }
        }
    };

    let t = |a, b| Sym { a, b, bar: false };
    let tb = |a, b| Sym { a, b, bar: true };
    let sign_diff = |x: bool, y: bool| i64::from(x) - i64::from(y);

    for i in 1..=n {
        for a in 1..=n {
            for j in 1..=n {
                for b in 1..=n {
                    let lhs1 = QScalar::q_pow(delta(i, j));
                    let lhs2 = -QScalar::q_pow(delta(a, b));
                    let d = sign_diff(b < a, i < j);
                    let rhs = &qd * &QScalar::from_int(-d);
                    for bar in [false, true] {
                        let s = |x, y| Sym { a: x, b: y, bar };
                        let mut row = Row::default();
                        push_word(&mut row, lhs1.clone(), s(i, a), s(j, b));
                        push_word(&mut row, lhs2.clone(), s(j, b), s(i, a));
                        push_word(&mut row, rhs.clone(), s(j, a), s(i, b));
                        rows.push(row);
                    }
                    let mut row = Row::default();
                    push_word(&mut row, lhs1.clone(), tb(i, a), t(j, b));
                    push_word(&mut row, lhs2.clone(), t(j, b), tb(i, a));
                    if b < a {
                        push_word(&mut row, -&qd, t(j, a), tb(i, b));
                    }
                    if i < j {
                        push_word(&mut row, qd.clone(), tb(j, a), t(i, b));
                    }
                    rows.push(row);
                }
            }
        }
    }

    // Sparse Gauss-Jordan elimination, keeping the pivot rows fully reduced.
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for mut row in rows {
        let hits: Vec<usize> = row
            .unk
            .keys()
            .copied()
            .filter(|k| pivots.contains_key(k))
            .collect();
        for k in hits {
            if let Some(c) = row.unk.get(&k).cloned() {
                row.axpy(&-c, &pivots[&k]);
            }
        }
        if row.unk.is_empty() {
            assert!(
                row.is_trivial(),
                "RTT relations force a relation among ordered monomials (N={n})"
            );
            continue;
        }
        let (&pk, pc) = row.unk.iter().next_back().unwrap();
        let inv = pc.inv().expect("nonzero pivot");
        row.scale(&inv);
        for other in pivots.values_mut() {
            if let Some(c) = other.unk.get(&pk).cloned() {
                other.axpy(&-c, &row);
            }
        }
        pivots.insert(pk, row);
    }
    assert_eq!(
        pivots.len(),
        names.len(),
        "RTT relations do not determine every out-of-order product (N={n})"
    );

    let mut table = HashMap::new();
    for (k, row) in pivots {
        assert_eq!(row.unk.len(), 1, "unreduced pivot row");
        let mut terms: Terms = row.known.into_iter().map(|(m, c)| (-c, m)).collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        table.insert(names[k], terms);
    }
    Rules { table }
}
