//! Bounded-degree certificate that `Γ_q ⊂ U_q(gl_2)` is maximal commutative:
//! inside the span `V_D` of PBW monomials with all exponents bounded by `D`,
//! the common centralizer of `d_11, d_21, d_22` equals `V_D ∩ Γ_q`.
//!
//! Both sides are computed by exact linear algebra. The commutator maps and the
//! spanning set of `Γ_q` respect two gradings (the `E`-minus-`F` weight and
//! the total `K`-degree), so everything is done block by block.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::degree::leading_part;
use super::DckError;
use crate::gtsub::d_gen;
use crate::scalar::linalg::{span_rank, Matrix};
use crate::scalar::QScalar;
use crate::uq::{enumerate_basis, AlgebraElement, PbwMonomial};

const N: usize = 2;

#[derive(Clone, Debug, Serialize)]
pub struct MaxcommBlock {
    /// `k_1 − r_1`.
    pub weight: i32,
    /// `λ_1 + λ_2`.
    pub k_degree: i32,
    pub span_dim: usize,
    pub kernel_dim: usize,
    pub gamma_dim: usize,
    pub joint_rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxcommCertificate {
    #[serde(rename = "N")]
    pub n: usize,
    pub bound: u32,
    pub span_dim: usize,
    pub kernel_dim: usize,
    pub gamma_dim: usize,
    /// `Γ_q ∩ V_D` recomputed with a wider candidate window has the same dimension.
    pub margin_stable: bool,
    /// Every kernel basis vector reduces to zero by subtracting `Γ_q` monomials
    /// with matching leading terms.
    pub kernel_reduces_into_gamma: bool,
    pub blocks: Vec<MaxcommBlock>,
    pub holds: bool,
}

fn grade(m: &PbwMonomial) -> (i32, i32) {
    (m.k[0] as i32 - m.r[0] as i32, m.lambda.iter().sum())
}

fn kmono(mu: [i32; 2]) -> Result<AlgebraElement, DckError> {
    let m = PbwMonomial {
        r: vec![0],
        lambda: mu.to_vec(),
        k: vec![0],
    };
    Ok(AlgebraElement::monomial(N, &m)?)
}

/// Basis of `Γ_q ∩ V_D` inside one `K`-degree block, from candidates
/// `K^μ d_21^b` with `|μ_i| ≤ D + margin`.
fn gamma_block(
    bound: u32,
    margin: i32,
    k_degree: i32,
    powers: &[AlgebraElement],
    index: &HashMap<PbwMonomial, usize>,
    len: usize,
) -> Result<Vec<Vec<QScalar>>, DckError> {
    let w = bound as i32 + margin;
    let mut cands = Vec::new();
    for mu1 in -w..=w {
        let mu2 = k_degree - mu1;
        if mu2.abs() > w {
            continue;
        }
        let k = kmono([mu1, mu2])?;
        for p in powers {
            cands.push(k.try_mul(p)?);
        }
    }
    // rows: monomials outside V_D, columns: candidates
    let mut outside: BTreeMap<PbwMonomial, usize> = BTreeMap::new();
    for c in &cands {
        for (m, _) in c.terms() {
            if !index.contains_key(&m) {
                let next = outside.len();
                outside.entry(m).or_insert(next);
            }
        }
    }
    let combos: Vec<Vec<QScalar>> = if outside.is_empty() {
        (0..cands.len())
            .map(|i| {
                (0..cands.len())
                    .map(|j| {
                        if i == j {
                            QScalar::one()
                        } else {
                            QScalar::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    } else {
        let mut mat = Matrix::zeros(outside.len(), cands.len());
        for (j, c) in cands.iter().enumerate() {
            for (m, x) in c.terms() {
                if let Some(&i) = outside.get(&m) {
                    mat.set(i, j, x);
                }
            }
        }
        mat.nullspace()
    };
    let mut out = Vec::new();
    for combo in combos {
        let mut v = vec![QScalar::zero(); len];
        for (j, x) in combo.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (m, c) in cands[j].terms() {
                if let Some(&i) = index.get(&m) {
                    v[i] = &v[i] + &(x * &c);
                }
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Tries to write `u` as a combination of `K^μ d_21^b` by repeatedly cancelling
/// a top-degree monomial.
fn reduces_into_gamma(mut u: AlgebraElement, d21: &AlgebraElement) -> Result<bool, DckError> {
    let mut powers: Vec<AlgebraElement> = vec![AlgebraElement::one(N)];
    for _ in 0..10_000 {
        if u.is_zero() {
            return Ok(true);
        }
        let top = leading_part(&u)?;
        let (m, c) = top.last().cloned().expect("nonzero");
        if m.r[0] != m.k[0] {
            return Ok(false);
        }
        let b = m.r[0] as usize;
        while powers.len() <= b {
            let next = powers.last().unwrap().try_mul(d21)?;
            powers.push(next);
        }
        let lead = leading_part(&powers[b])?;
        let (m0, _) = lead.last().cloned().expect("nonzero");
        let mu = [m.lambda[0] - m0.lambda[0], m.lambda[1] - m0.lambda[1]];
        let cand = kmono(mu)?.try_mul(&powers[b])?;
        let cc = cand.coefficient(&m);
        if cc.is_zero() {
            return Ok(false);
        }
        u = u.try_sub(&cand.scale(&c.checked_div(&cc).expect("nonzero")))?;
    }
    Ok(false)
}

pub fn maxcomm_certificate(bound: u32) -> Result<MaxcommCertificate, DckError> {
    if bound == 0 || bound > 3 {
        return Err(DckError::OutOfRange(format!("bound D={bound}")));
    }
    let gens: Vec<AlgebraElement> = [(1, 1), (2, 1), (2, 2)]
        .iter()
        .map(|&(r, s)| d_gen(N, r, s).map(|d| d.value))
        .collect::<Result<_, _>>()?;
    let d21 = gens[1].clone();
    let mut powers = vec![AlgebraElement::one(N)];
    for _ in 0..bound {
        let next = powers.last().unwrap().try_mul(&d21)?;
        powers.push(next);
    }

    let basis = enumerate_basis(N, bound);
    let mut blocks: BTreeMap<(i32, i32), Vec<PbwMonomial>> = BTreeMap::new();
    for m in basis.iter() {
        blocks.entry(grade(m)).or_default().push(m.clone());
    }

    let mut report_blocks = Vec::new();
    let (mut kernel_total, mut gamma_total) = (0, 0);
    let mut margin_stable = true;
    let mut reduces = true;
    let mut holds = true;
    for (&(weight, k_degree), members) in &blocks {
        let index: HashMap<PbwMonomial, usize> = members
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let elems: Vec<AlgebraElement> = members
            .iter()
            .map(|m| AlgebraElement::monomial(N, m))
            .collect::<Result<_, _>>()?;

        // kernel of u ↦ ([u, d_11], [u, d_21], [u, d_22])
        let mut rows: HashMap<(usize, PbwMonomial), usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, QScalar)> = Vec::new();
        for (j, e) in elems.iter().enumerate() {
            for (gi, g) in gens.iter().enumerate() {
                for (m, c) in e.commutator(g)?.terms() {
                    let next = rows.len();
                    let i = *rows.entry((gi, m)).or_insert(next);
                    entries.push((i, j, c));
                }
            }
        }
        let kernel: Vec<Vec<QScalar>> = if rows.is_empty() {
            (0..members.len())
                .map(|i| {
                    (0..members.len())
                        .map(|j| {
                            if i == j {
                                QScalar::one()
                            } else {
                                QScalar::zero()
                            }
                        })
                        .collect()
                })
                .collect()
        } else {
            let mut mat = Matrix::zeros(rows.len(), members.len());
            for (i, j, c) in entries {
                mat.set(i, j, c);
            }
            mat.nullspace()
        };

        let gamma = if weight == 0 {
            gamma_block(
                bound,
                bound as i32,
                k_degree,
                &powers,
                &index,
                members.len(),
            )?
        } else {
            Vec::new()
        };
        let gamma_dim = span_rank(&gamma);
        if weight == 0 {
            let wider = gamma_block(
                bound,
                bound as i32 + 1,
                k_degree,
                &powers,
                &index,
                members.len(),
            )?;
            margin_stable &= span_rank(&wider) == gamma_dim;
        }
        let kernel_dim = span_rank(&kernel);
        let joint: Vec<Vec<QScalar>> = kernel.iter().chain(&gamma).cloned().collect();
        let joint_rank = span_rank(&joint);
        holds &= kernel_dim == gamma_dim && joint_rank == gamma_dim;

        for v in &kernel {
            let mut u = AlgebraElement::zero(N);
            for (x, e) in v.iter().zip(&elems) {
                if !x.is_zero() {
                    u = u.try_add(&e.scale(x))?;
                }
            }
            reduces &= reduces_into_gamma(u, &d21)?;
        }
        kernel_total += kernel_dim;
        gamma_total += gamma_dim;
        report_blocks.push(MaxcommBlock {
            weight,
            k_degree,
            span_dim: members.len(),
            kernel_dim,
            gamma_dim,
            joint_rank,
        });
    }
    Ok(MaxcommCertificate {
        n: N,
        bound,
        span_dim: basis.len(),
        kernel_dim: kernel_total,
        gamma_dim: gamma_total,
        margin_stable,
        kernel_reduces_into_gamma: reduces,
        blocks: report_blocks,
        holds: holds && margin_stable && reduces,
    })
}
