//! `qgt`: exact computations and checks in `U_q(gl_N)`.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qgt_core::dck::{
    brute_force_leading_perm, gr_multiply, leading_term, maxcomm_certificate,
    term_leading_monomial, theorem_term, total_degree, verify_lt_theorem, GrMonomial,
};
use qgt_core::galois::{
    check_generator_invariance, embed_check, invariant_generators, non_invariant, sample_points,
    stabilizer_m, PhiForm,
};
use qgt_core::gl2gwa::{fiber_gl2, module_action_check, sample_characters, GtCharacter};
use qgt_core::gtsub::{
    commute_check, d_gen, derive_constant_table, hc_closed_form, hc_product_formula, hc_project,
    jacobian_witness, z_poly,
};
use qgt_core::scalar::QScalar;
use qgt_core::uq::{engine_soundness, enumerate_basis};

/// Default seed for every randomized suite.
const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(
    name = "qgt",
    version,
    about = "Exact PBW, Gelfand-Tsetlin and Galois-order computations for U_q(gl_N)"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Level {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Balanced,
    Printed,
}

impl From<Form> for PhiForm {
    fn from(f: Form) -> Self {
        match f {
            Form::Balanced => PhiForm::Balanced,
            Form::Printed => PhiForm::Printed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print d_rs in PBW normal form.
    Dgen(Level),
    /// Print the coefficients of z_r(u).
    Zpoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Leading term of d_rs, compared with the cyclic term and the brute-force oracle.
    Lt(Level),
    /// Leading-term check for every 1 <= s <= r <= N.
    VerifyLt {
        #[arg(long)]
        n: usize,
    },
    /// Pairwise commutators of all d_rs.
    Commute {
        #[arg(long)]
        n: usize,
    },
    /// Harish-Chandra images of level r against the product formula and closed form.
    Hc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Graded products against leading terms of engine products.
    Gr {
        #[arg(long)]
        n: usize,
        /// Exponent bound of the sampled monomials.
        #[arg(long, default_value_t = 1)]
        bound: u32,
    },
    /// Relations, invariance, conjugation and d_rs images under the Galois embedding.
    EmbedCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Form::Balanced)]
        form: Form,
        /// Also compute phi(d_rs) through the generator images.
        #[arg(long)]
        direct: bool,
    },
    /// G-invariance of generator images and invariants; stabilizers of sampled points.
    Invariance {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Form::Balanced)]
        form: Form,
        /// Number of sampled points for the stabilizer check.
        #[arg(long, default_value_t = 100)]
        bound: usize,
    },
    /// Maximal commutativity certificate at N = 2 for exponent bound D.
    MaxcommCert {
        #[arg(long)]
        bound: u32,
    },
    /// Fiber of a gl_2 Gelfand-Tsetlin character and checks of its modules.
    Gl2Fiber {
        /// Character as JSON: {"g11": "...", "g21": "...", "g22": "..."}.
        #[arg(long, conflicts_with = "samples")]
        character: Option<String>,
        /// Number of seeded characters to sample instead.
        #[arg(long)]
        samples: Option<usize>,
        /// Orbit bound for module checks.
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
    /// Associativity and normal-form idempotence on seeded random words.
    Bench {
        #[arg(long)]
        n: usize,
        /// Number of word triples (and of monomials).
        #[arg(long, default_value_t = 1000)]
        bound: usize,
    },
}

struct Report {
    text: String,
    json: Value,
    pass: bool,
}

fn k_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("K[{i}]")).collect()
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::Dgen(l) => {
            let d = d_gen(l.n, l.r, l.s)?;
            Report {
                text: format!("d_{}{} = {}\n", l.r, l.s, d.value),
                json: json!({"N": l.n, "r": l.r, "s": l.s, "value": d.value.to_string(), "terms": d.value.terms().len()}),
                pass: true,
            }
        }
        Command::Zpoly { n, r } => {
            let z = z_poly(*n, *r)?;
            let mut text = String::new();
            let mut coeffs = Vec::new();
            for (s, c) in z.coeffs.iter().enumerate() {
                writeln!(text, "[u^-{s}] {c}")?;
                coeffs.push(c.to_string());
            }
            Report {
                text,
                json: json!({"N": n, "r": r, "coefficients": coeffs}),
                pass: true,
            }
        }
        Command::Lt(l) => {
            let d = d_gen(l.n, l.r, l.s)?;
            let (mono, coeff) = leading_term(&d.value)?;
            let term = theorem_term(l.r, l.s);
            let oracle = brute_force_leading_perm(l.r, l.s)?;
            let pass = term.sigma == oracle && term_leading_monomial(l.n, &term)? == mono;
            let theorem = term.sigma;
            let deg = total_degree(&mono);
            Report {
                text: format!(
                    "lt(d_{}{}) = ({coeff})*{mono}\ndegree {deg}\ncyclic σ {theorem}, oracle σ {oracle}: {}\n",
                    l.r,
                    l.s,
                    status(pass)
                ),
                json: json!({
                    "N": l.n, "r": l.r, "s": l.s,
                    "monomial": mono.to_string(), "coefficient": coeff.to_string(), "degree": deg,
                    "theorem_perm": theorem.to_string(), "oracle_perm": oracle.to_string(), "matches": pass,
                }),
                pass,
            }
        }
        Command::VerifyLt { n } => {
            let rep = verify_lt_theorem(*n)?;
            let mut text = String::new();
            for p in &rep.pairs {
                writeln!(
                    text,
                    "{} d_{}{}: σ = {}, lt = {}",
                    status(p.matches),
                    p.r,
                    p.s,
                    p.theorem_perm,
                    p.lt_monomial
                )?;
                if let Some(d) = &p.detail {
                    writeln!(text, "  {d}")?;
                }
            }
            Report {
                text,
                json: serde_json::to_value(&rep)?,
                pass: rep.all_match(),
            }
        }
        Command::Commute { n } => {
            let recs = commute_check(*n)?;
            let mut text = String::new();
            for c in &recs {
                writeln!(
                    text,
                    "{} [d_{}{}, d_{}{}]",
                    status(c.commutes),
                    c.r,
                    c.s,
                    c.r2,
                    c.s2
                )?;
            }
            let pass = recs.iter().all(|c| c.commutes);
            writeln!(text, "{} pairs", recs.len())?;
            Report {
                text,
                json: json!({"N": n, "pairs": recs}),
                pass,
            }
        }
        Command::Hc { n, r } => {
            let names = k_names(*n);
            let z = z_poly(*n, *r)?;
            let product = hc_product_formula(*n, *r)?;
            let table = derive_constant_table(*n, *r)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut pass = true;
            for s in 0..=*r {
                let hz = hc_project(&z.coeffs[s], *r)?
                    .to_k_laurent()
                    .context("K-only image")?;
                let hd = hc_project(&d_gen(*n, *r, s)?.value, *r)?
                    .to_k_laurent()
                    .context("K-only image")?;
                let closed = hc_closed_form(*n, *r, s, &table)?;
                let (zm, cm) = (hz == product[s], hd == closed);
                pass &= zm && cm;
                let e = &table.entries[s];
                writeln!(
                    text,
                    "s={s}: hc(d_{r}{s}) = {}\n  z factor {}, e index {}, constant {}; product formula {}, closed form {}",
                    hd.display_with(&names),
                    e.z_factor,
                    e.e_index,
                    e.constant,
                    status(zm),
                    status(cm)
                )?;
                rows.push(json!({
                    "s": s, "hc": hd.display_with(&names).to_string(), "table": e,
                    "product_formula_match": zm, "closed_form_match": cm,
                }));
            }
            let jac = jacobian_witness(*n, *r)?;
            pass &= !jac.is_zero();
            writeln!(text, "Jacobian witness {jac}: {}", status(!jac.is_zero()))?;
            Report {
                text,
                json: json!({"N": n, "r": r, "entries": rows, "jacobian": jac.to_string()}),
                pass,
            }
        }
        Command::Gr { n, bound } => {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let basis = enumerate_basis(*n, *bound);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut failures = Vec::new();
            let pairs = 200;
            for _ in 0..pairs {
                let a = basis.choose(&mut rng).context("empty basis")?;
                let b = basis.choose(&mut rng).context("empty basis")?;
                let x = GrMonomial::new(QScalar::one(), a.clone());
                let y = GrMonomial::new(QScalar::one(), b.clone());
                let g = gr_multiply(&x, &y);
                let prod = x.lift()?.try_mul(&y.lift()?)?;
                if leading_term(&prod)? != (g.mono.clone(), g.coeff.clone()) {
                    failures.push(format!("{a} * {b}"));
                }
            }
            let pass = failures.is_empty();
            Report {
                text: format!(
                    "{pairs} products checked, {} failures: {}\n",
                    failures.len(),
                    status(pass)
                ),
                json: json!({"N": n, "bound": bound, "pairs": pairs, "failures": failures}),
                pass,
            }
        }
        Command::EmbedCheck { n, form, direct } => {
            let rep = embed_check(*n, (*form).into(), *direct)?;
            let mut text = String::new();
            for r in &rep.relations {
                writeln!(text, "{} relation {}", status(r.residue_is_zero), r.name)?;
            }
            for r in &rep.invariance {
                writeln!(text, "{} invariance {}", status(r.invariant), r.generator)?;
            }
            for c in &rep.conjugation {
                writeln!(
                    text,
                    "{} conjugation {} {}",
                    status(c.preserved),
                    c.group_generator,
                    c.delta
                )?;
            }
            for g in &rep.gamma {
                writeln!(
                    text,
                    "{} phi(d_{}{}) = {}",
                    status(g.holds()),
                    g.r,
                    g.s,
                    g.image
                )?;
            }
            writeln!(
                text,
                "{} invariant generators fixed",
                status(rep.invariant_generators_fixed)
            )?;
            Report {
                text,
                pass: rep.all_pass(),
                json: serde_json::to_value(&rep)?,
            }
        }
        Command::Invariance { n, form, bound } => {
            let gens = check_generator_invariance(*n, (*form).into())?;
            let moved = non_invariant(&invariant_generators(*n));
            let points = sample_points(*n, *bound, seed);
            let mut trivial = 0;
            for p in &points {
                if stabilizer_m(*n, p)?.is_trivial() {
                    trivial += 1;
                }
            }
            let mut text = String::new();
            for g in &gens {
                writeln!(text, "{} {}", status(g.invariant), g.generator)?;
            }
            writeln!(
                text,
                "{} invariants x_rs and p fixed by G",
                status(moved.is_empty())
            )?;
            writeln!(
                text,
                "{} {trivial}/{} stabilizers trivial",
                status(trivial == points.len()),
                points.len()
            )?;
            Report {
                text,
                pass: gens.iter().all(|g| g.invariant)
                    && moved.is_empty()
                    && trivial == points.len(),
                json: json!({
                    "N": n, "generators": gens, "moved_invariants": moved,
                    "points": points.len(), "trivial_stabilizers": trivial,
                }),
            }
        }
        Command::MaxcommCert { bound } => {
            let cert = maxcomm_certificate(*bound)?;
            let mut text = String::new();
            for b in &cert.blocks {
                writeln!(
                    text,
                    "weight {:>2}, K-degree {:>2}: span {}, kernel {}, gamma {}, joint rank {}",
                    b.weight, b.k_degree, b.span_dim, b.kernel_dim, b.gamma_dim, b.joint_rank
                )?;
            }
            writeln!(
                text,
                "{} D={}: span {}, kernel {}, gamma {}",
                status(cert.holds),
                cert.bound,
                cert.span_dim,
                cert.kernel_dim,
                cert.gamma_dim
            )?;
            Report {
                text,
                pass: cert.holds,
                json: serde_json::to_value(&cert)?,
            }
        }
        Command::Gl2Fiber {
            character,
            samples,
            bound,
        } => {
            let chars: Vec<(String, GtCharacter)> = match (character, samples) {
                (Some(src), _) => vec![("input".into(), GtCharacter::from_json(src)?)],
                (None, Some(k)) => sample_characters(*k, seed)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| (format!("#{i} {:?}", s.kind), s.character))
                    .collect(),
                (None, None) => bail!("one of --character or --samples is required"),
            };
            let mut text = String::new();
            let mut out = Vec::new();
            let mut pass = true;
            for (label, chi) in &chars {
                let rep = fiber_gl2(chi)?;
                writeln!(
                    text,
                    "{label}: g11 = {}, g21 = {}, g22 = {}\n  point k1 = {}, k2 = {}, tau = {}\n  breaks {:?}, count {}",
                    chi.g11, chi.g21, chi.g22, rep.point.k1, rep.point.k2, rep.point.tau, rep.breaks, rep.count
                )?;
                let mut checks = Vec::new();
                for m in &rep.orbit_modules {
                    let c = module_action_check(chi, m, *bound)?;
                    let anchored = m.support_window.contains(0);
                    let ok = c.relations_ok
                        && c.gamma_eigen_ok
                        && c.max_weight_dim <= 2
                        && c.contains_character == anchored;
                    pass &= ok;
                    let w =
                        |x: Option<i64>, inf: &str| x.map_or(inf.to_string(), |v| v.to_string());
                    writeln!(
                        text,
                        "  {} {:?} [{}, {}]{}",
                        status(ok),
                        m.kind,
                        w(m.support_window.lo, "-inf"),
                        w(m.support_window.hi, "inf"),
                        if anchored {
                            " (contains the character)"
                        } else {
                            ""
                        }
                    )?;
                    checks.push(c);
                }
                out.push(json!({"fiber": rep, "module_checks": checks}));
            }
            Report {
                text,
                json: if out.len() == 1 {
                    out.remove(0)
                } else {
                    Value::Array(out)
                },
                pass,
            }
        }
        Command::Bench { n, bound } => {
            let start = std::time::Instant::now();
            let rep = engine_soundness(*n, *bound, *bound, seed)?;
            eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
            Report {
                text: format!(
                    "{} N={}: {} triples, {} associativity failures; {} monomials, {} idempotence failures\n",
                    status(rep.passes()),
                    rep.n,
                    rep.triples,
                    rep.associativity_failures,
                    rep.monomials,
                    rep.idempotence_failures
                ),
                pass: rep.passes(),
                json: serde_json::to_value(&rep)?,
            }
        }
    })
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("QGT_THREADS") {
        let n: usize = v
            .parse()
            .with_context(|| format!("QGT_THREADS={v} is not a number"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let body = if cli.json {
        let mut s =
            serde_json::to_string_pretty(&json!({"pass": report.pass, "result": report.json}))
                .expect("report serializes");
        s.push('\n');
        s
    } else {
        report.text
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
