//! Multiplication of internal monomials.
//!
//! A product `(L_a K_a U_a)(L_b K_b U_b)` is computed as
//! `L_a · (K_a (U_a L_b) K_b) · U_b`: the only genuinely noncommutative
//! crossing is `U_a · L_b`, the `K` blocks slide through by their weights, and
//! what remains are products inside the two Borel halves. Each of the three
//! kinds of block product is memoised.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::{Mutex, RwLock};

use super::mono::{add_vec, dot, first_nonzero, last_nonzero, TMono};
use super::roots::Roots;
use super::rules::{derive, Letter, Terms};
use crate::scalar::QScalar;

type Key = (Vec<i32>, Vec<i32>);
type Cache = RwLock<HashMap<Key, Arc<Terms>>>;

pub(crate) struct Engine {
    pub n: usize,
    pub roots: Roots,
    rules: HashMap<(Letter, Letter), Terms>,
    /// K-weight of each root: `K^μ t̄_β = q^{(μ, wt_β)} t̄_β K^μ`, and the
    /// negative of it for `t_β`.
    weights: Vec<Vec<i32>>,
    ll: Cache,
    uu: Cache,
    ul: Cache,
}

static ENGINES: OnceLock<Mutex<HashMap<usize, Arc<Engine>>>> = OnceLock::new();

impl Engine {
    /// The shared engine for rank `n` (built on first use).
    pub fn get(n: usize) -> Arc<Engine> {
        let map = ENGINES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(e) = map.lock().get(&n) {
            return e.clone();
        }
        let built = Arc::new(Engine::build(n));
        map.lock().entry(n).or_insert(built).clone()
    }

    fn build(n: usize) -> Engine {
        let roots = Roots::new(n);
        let rules = derive(n).table;
        let weights = roots
            .iter()
            .map(|r| {
                let mut w = vec![0; n];
                w[r.i - 1] += 1;
                w[r.j - 1] -= 1;
                w
            })
            .collect();
        Engine {
            n,
            roots,
            rules,
            weights,
            ll: RwLock::new(HashMap::new()),
            uu: RwLock::new(HashMap::new()),
            ul: RwLock::new(HashMap::new()),
        }
    }

    pub fn m(&self) -> usize {
        self.roots.len()
    }

    #[cfg(test)]
    pub(crate) fn rule_table(&self) -> impl Iterator<Item = (&(Letter, Letter), &Terms)> {
        self.rules.iter()
    }

    pub fn weight(&self, pos: usize) -> &[i32] {
        &self.weights[pos]
    }

    /// Total K-weight of a block of `t̄` exponents (negate for a `t` block).
    fn block_weight(&self, exps: &[i32]) -> Vec<i32> {
        let mut w = vec![0; self.n];
        for (p, &e) in exps.iter().enumerate() {
            if e != 0 {
                for (x, y) in w.iter_mut().zip(&self.weights[p]) {
                    *x += e * y;
                }
            }
        }
        w
    }

    fn mono(&self, l: &[i32], k: &[i32], u: &[i32]) -> TMono {
        TMono::from_parts(l, k, u)
    }

    fn zeros_m(&self) -> Vec<i32> {
        vec![0; self.m()]
    }

    fn zeros_n(&self) -> Vec<i32> {
        vec![0; self.n]
    }

    fn cached(&self, cache: &Cache, key: Key, f: impl FnOnce() -> Terms) -> Arc<Terms> {
        if let Some(v) = cache.read().get(&key) {
            return v.clone();
        }
        let v = Arc::new(f());
        cache.write().entry(key).or_insert(v).clone()
    }

    /// Product of two monomials, accumulated into `out` with factor `coeff`.
    pub fn mul_mono_into(
        &self,
        a: &TMono,
        b: &TMono,
        coeff: &QScalar,
        out: &mut HashMap<TMono, QScalar>,
    ) {
        let cross = self.ul(a.u(), b.l());
        for (c1, m1) in cross.iter() {
            // K_a · L1 = q^{-(K_a, wt L1)} L1 K_a and U1 · K_b = q^{-(K_b, wt U1)} K_b U1,
            // with wt taken as the t̄-weight of the block
            let shift =
                -dot(a.k(), &self.block_weight(m1.l())) - dot(b.k(), &self.block_weight(m1.u()));
            let kmid = add_vec(&add_vec(a.k(), m1.k()), b.k());
            let c1 = &(coeff * c1) * &QScalar::q_pow(shift);
            let left = self.ll(a.l(), m1.l());
            let right = self.uu(m1.u(), b.u());
            for (c2, m2) in left.iter() {
                let c12 = &c1 * c2;
                let k2 = add_vec(&kmid, m2.k());
                for (c3, m3) in right.iter() {
                    let k3 = add_vec(&k2, m3.k());
                    let mono = self.mono(m2.l(), &k3, m3.u());
                    let c = &c12 * c3;
                    accumulate(out, mono, c);
                }
            }
        }
    }

    /// Product of two pure `t`-blocks; result terms have empty `t̄` part.
    fn ll(&self, x: &[i32], y: &[i32]) -> Arc<Terms> {
        let trivial = match (last_nonzero(x), first_nonzero(y)) {
            (Some(p), Some(p0)) => p <= p0,
            _ => true,
        };
        if trivial {
            return Arc::new(vec![(
                QScalar::one(),
                self.mono(&add_vec(x, y), &self.zeros_n(), &self.zeros_m()),
            )]);
        }
        self.cached(&self.ll, (x.to_vec(), y.to_vec()), || {
            let p = last_nonzero(x).unwrap();
            let p0 = first_nonzero(y).unwrap();
            let mut xr = x.to_vec();
            xr[p] -= 1;
            let mut yr = y.to_vec();
            yr[p0] -= 1;
            let wy = self.block_weight(&yr);
            let mut out = HashMap::new();
            for (cw, w) in self.rules[&(Letter::L(p), Letter::L(p0))].iter() {
                // x' · (L_w K_w) · y' = q^{-(K_w, wt y')} x' L_w y' K_w, wt as above
                let cw = cw * &QScalar::q_pow(-dot(w.k(), &wy));
                for (c2, m2) in self.ll(&xr, w.l()).iter() {
                    let w2 = -dot(m2.k(), &wy);
                    let c2 = &(&cw * c2) * &QScalar::q_pow(w2);
                    let kk = add_vec(w.k(), m2.k());
                    for (c3, m3) in self.ll(m2.l(), &yr).iter() {
                        let k = add_vec(&kk, m3.k());
                        accumulate(&mut out, self.mono(m3.l(), &k, &self.zeros_m()), &c2 * c3);
                    }
                }
            }
            out.into_iter().map(|(m, c)| (c, m)).collect()
        })
    }

    /// Product of two pure `t̄`-blocks; result terms have empty `t` part.
    fn uu(&self, x: &[i32], y: &[i32]) -> Arc<Terms> {
        let trivial = match (last_nonzero(x), first_nonzero(y)) {
            (Some(p), Some(p0)) => p <= p0,
            _ => true,
        };
        if trivial {
            return Arc::new(vec![(
                QScalar::one(),
                self.mono(&self.zeros_m(), &self.zeros_n(), &add_vec(x, y)),
            )]);
        }
        self.cached(&self.uu, (x.to_vec(), y.to_vec()), || {
            let p = last_nonzero(x).unwrap();
            let p0 = first_nonzero(y).unwrap();
            let mut xr = x.to_vec();
            xr[p] -= 1;
            let mut yr = y.to_vec();
            yr[p0] -= 1;
            let wx = self.block_weight(&xr);
            let mut out = HashMap::new();
            for (cw, w) in self.rules[&(Letter::U(p), Letter::U(p0))].iter() {
                // x' · K_w U_w · y' = q^{-(K_w, wt x')} K_w · x' U_w y'
                let cw = cw * &QScalar::q_pow(-dot(w.k(), &wx));
                for (c2, m2) in self.uu(&xr, w.u()).iter() {
                    let kk = add_vec(w.k(), m2.k());
                    let c2 = &cw * c2;
                    for (c3, m3) in self.uu(m2.u(), &yr).iter() {
                        let k = add_vec(&kk, m3.k());
                        accumulate(&mut out, self.mono(&self.zeros_m(), &k, m3.u()), &c2 * c3);
                    }
                }
            }
            out.into_iter().map(|(m, c)| (c, m)).collect()
        })
    }

    /// Product `u · l` of a `t̄`-block and a `t`-block.
    fn ul(&self, u: &[i32], l: &[i32]) -> Arc<Terms> {
        let (Some(p), Some(p0)) = (last_nonzero(u), first_nonzero(l)) else {
            return Arc::new(vec![(QScalar::one(), self.mono(l, &self.zeros_n(), u))]);
        };
        self.cached(&self.ul, (u.to_vec(), l.to_vec()), || {
            let mut ur = u.to_vec();
            ur[p] -= 1;
            let mut lr = l.to_vec();
            lr[p0] -= 1;
            let head = self.mono(&self.zeros_m(), &self.zeros_n(), &ur);
            let tail = self.mono(&lr, &self.zeros_n(), &self.zeros_m());
            let mut mid = HashMap::new();
            for (cw, w) in self.rules[&(Letter::U(p), Letter::L(p0))].iter() {
                self.mul_mono_into(&head, w, cw, &mut mid);
            }
            let mut out = HashMap::new();
            for (m, c) in mid {
                self.mul_mono_into(&m, &tail, &c, &mut out);
            }
            out.into_iter().map(|(m, c)| (c, m)).collect()
        })
    }
}

pub(crate) fn accumulate(out: &mut HashMap<TMono, QScalar>, mono: TMono, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match out.entry(mono) {
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}
