//! Command-line interface: every operation reads a problem file (or one of
//! the embedded corpus problems), runs exactly, and emits a deterministic
//! report as a table or JSON.
//!
//! Exit codes: 0 = success, 1 = a verification found the claimed property
//! false (the report carries the witness), 2 = input or usage error.

use cihom::grammar::{parse_poly, render_matrix, render_poly, render_vec};
use cihom::invariants::{
    dimension_vanishing_violations, eta, module_complexity, rigidity_violations, serre_euler,
    theta,
};
use cihom::pairs::{change_of_rings_report, ext_modules, Pairing};
use cihom::presentation::{colon_ideal, ses_failures, Presentation};
use cihom::problem::ProblemFile;
use cihom::report::{show_length, OutputFormat, Report};
use cihom::resolution::{
    depth, eisenbud_operators, matrix_factorization, resolve, Resolution,
};
use cihom::ring::Base;
use cihom::scalar::FieldSpec;
use cihom::series::{fit_series, SeriesFit};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use std::path::PathBuf;
use std::process::ExitCode;

const CORPUS: &[(&str, &str)] = &[
    ("node", include_str!("../corpus/problems/node.txt")),
    ("codim2", include_str!("../corpus/problems/codim2.txt")),
    ("regular", include_str!("../corpus/problems/regular.txt")),
    ("weighted", include_str!("../corpus/problems/weighted.txt")),
    ("boundary", include_str!("../corpus/problems/boundary.txt")),
];

#[derive(Parser)]
#[command(
    name = "cihom",
    version,
    about = "Exact homological invariants of graded module pairs over complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Problem file describing the ring, modules, maps, pairs, and sequences.
    #[arg(long, global = true)]
    problem: Option<PathBuf>,
    /// Use an embedded corpus problem instead of --problem.
    #[arg(long, global = true)]
    corpus: Option<String>,
    /// Coefficient field override: `q` or `fp:P`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Homological horizon (default 2·dim Q + 2·codim + 6; env CIHOM_HORIZON).
    #[arg(long, global = true)]
    horizon: Option<usize>,
    /// Output format: `table` or `json`.
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of an ideal (plus the ring relations over `r`).
    Groebner {
        /// Semicolon-separated generators.
        #[arg(long)]
        gens: String,
        /// Work over the quotient `r` or the ambient polynomial ring `q`.
        #[arg(long, default_value = "r")]
        over: String,
    },
    /// Canonical normal form of a polynomial modulo an ideal.
    Nf {
        #[arg(long)]
        gens: String,
        /// The polynomial to reduce.
        #[arg(long)]
        of: String,
        #[arg(long, default_value = "r")]
        over: String,
    },
    /// Generators of the first syzygy module of a polynomial family.
    Syzygies {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value = "r")]
        over: String,
    },
    /// Hilbert series numerator and values of a module.
    Hilbert {
        #[arg(long, short)]
        module: String,
    },
    /// Krull dimension of a module.
    Dim {
        #[arg(long, short)]
        module: String,
    },
    /// Depth of a module (via its resolution over the ambient ring).
    Depth {
        #[arg(long, short)]
        module: String,
    },
    /// Total length of a module (finite or `infinite`).
    Length {
        #[arg(long, short)]
        module: String,
    },
    /// Minimal presentation of a module.
    Present {
        #[arg(long, short)]
        module: String,
    },
    /// Dual module Hom(M, R) with its embedding data.
    Dual {
        #[arg(long, short)]
        module: String,
    },
    /// Torsion-freeness test with a witness on failure.
    Torsionfree {
        #[arg(long, short)]
        module: String,
    },
    /// Pushforward presentation derived from the dual embedding.
    Pushforward {
        #[arg(long, short)]
        module: String,
    },
    /// Annihilator ideal of a module.
    Annihilator {
        #[arg(long, short)]
        module: String,
    },
    /// Colon ideal (U : v) of a scalar ideal by an element.
    Colon {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        of: String,
        #[arg(long, default_value = "r")]
        over: String,
    },
    /// Tensor product of two modules: series window and length.
    Tensor {
        #[arg(short)]
        m: String,
        #[arg(short)]
        n: String,
    },
    /// Minimal free resolution: twists, ranks, and verification.
    Resolve {
        #[arg(long, short)]
        module: String,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Betti numbers of a module.
    Betti {
        #[arg(long, short)]
        module: String,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Matrix factorization of the defining equation from a periodic tail.
    Mf {
        #[arg(long, short)]
        module: String,
    },
    /// Degree −2 cohomology operators on a resolution.
    Operators {
        #[arg(long, short)]
        module: String,
        /// Homological index of the displayed matrices.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Pairing lengths: the sequence of Tor lengths and its finiteness onset.
    Tor {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
    },
    /// Lengths of the Ext modules of a pair.
    Ext {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
    },
    /// Rational fit of the pairing lengths: numerator and pole orders.
    Fit {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
    },
    /// Normalized asymptotic invariant of a pair.
    Eta {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
        /// Order of the invariant (default: the codimension).
        #[arg(long, short)]
        e: Option<usize>,
    },
    /// Stable alternating difference of the lengths (hypersurface case).
    Theta {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
    },
    /// Euler characteristic of the pair over the ambient polynomial ring.
    Chi {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
    },
    /// Complexity of a module, or of a pair together with both modules.
    Complexity {
        #[arg(long, short)]
        module: Option<String>,
        #[arg(long, short)]
        pair: Option<String>,
    },
    /// Largest index whose operator joint kernel is nonzero.
    Kirby {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
    },
    /// Degreewise exactness of the change-of-rings sequence for a pair.
    Exactness {
        #[arg(long, short)]
        pair: Option<String>,
        #[arg(short)]
        m: Option<String>,
        #[arg(short)]
        n: Option<String>,
        /// Top homological index checked.
        #[arg(long, default_value_t = 5)]
        through: usize,
        /// Lowest internal degree checked.
        #[arg(long)]
        lo: Option<i64>,
        /// Highest internal degree checked.
        #[arg(long)]
        hi: Option<i64>,
    },
    /// Verify a declared short exact sequence.
    Ses {
        #[arg(long)]
        name: String,
    },
    /// Run the built-in verification suites.
    Check {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List the embedded corpus problems, or print one.
    Corpus {
        #[arg(long)]
        name: Option<String>,
    },
}

enum Outcome {
    /// A report and whether every verified property held.
    Ok(Report, bool),
    /// Raw text output (corpus dumps).
    Raw(String),
}

struct InputError(String);

impl From<String> for InputError {
    fn from(s: String) -> InputError {
        InputError(s)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match OutputFormat::parse(&cli.format) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(Outcome::Ok(report, ok)) => {
            if emit(&cli, report.render(format)).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Raw(text)) => {
            if emit(&cli, text).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: String) -> Result<(), ()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(cli: &Cli) -> Result<ProblemFile, InputError> {
    let text = match (&cli.problem, &cli.corpus) {
        (Some(_), Some(_)) => {
            return Err("give either --problem or --corpus, not both".to_string().into())
        }
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        (None, Some(name)) => CORPUS
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| format!("no corpus problem named `{name}`"))?,
        (None, None) => {
            return Err("this command needs --problem FILE or --corpus NAME"
                .to_string()
                .into())
        }
    };
    let field = match &cli.field {
        Some(s) => Some(FieldSpec::parse(s)?),
        None => None,
    };
    ProblemFile::parse_with_field(&text, field).map_err(|e| InputError(e.to_string()))
}

fn effective_horizon(cli: &Cli, pf: &ProblemFile) -> usize {
    if let Some(h) = cli.horizon {
        return h;
    }
    if let Ok(v) = std::env::var("CIHOM_HORIZON") {
        if let Ok(h) = v.parse::<usize>() {
            return h;
        }
    }
    2 * pf.ring.nvars() + 2 * pf.ring.codim() + 6
}

fn module<'a>(pf: &'a ProblemFile, name: &str) -> Result<&'a Presentation, InputError> {
    pf.modules
        .get(name)
        .ok_or_else(|| InputError(format!("no module named `{name}`")))
}

fn select_pair<'a>(
    pf: &'a ProblemFile,
    pair: &Option<String>,
    m: &Option<String>,
    n: &Option<String>,
) -> Result<(String, &'a Presentation, &'a Presentation), InputError> {
    match (pair, m, n) {
        (Some(p), None, None) => {
            let (a, b) = pf
                .pairs
                .get(p)
                .ok_or_else(|| InputError(format!("no pair named `{p}`")))?;
            Ok((p.clone(), module(pf, a)?, module(pf, b)?))
        }
        (None, Some(a), Some(b)) => Ok((format!("{a},{b}"), module(pf, a)?, module(pf, b)?)),
        _ => Err("select a pair with --pair NAME or with -m NAME -n NAME"
            .to_string()
            .into()),
    }
}

fn parse_base(s: &str) -> Result<Base, InputError> {
    match s {
        "r" => Ok(Base::R),
        "q" => Ok(Base::Q),
        other => Err(format!("unknown base `{other}` (expected r or q)").into()),
    }
}

fn parse_gens(
    pf: &ProblemFile,
    gens: &str,
) -> Result<Vec<cihom::freemod::PolyVec>, InputError> {
    let mut out = Vec::new();
    for part in gens.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let p = parse_poly(part, pf.ring.ctx())
            .map_err(|e| format!("in `{part}`: {e}"))?;
        out.push(cihom::freemod::PolyVec { comps: vec![p] });
    }
    if out.is_empty() {
        return Err("no generators given".to_string().into());
    }
    Ok(out)
}

fn pair_lengths(
    pair: &Pairing,
) -> Result<(usize, Vec<BigInt>), InputError> {
    let lens = pair.lengths();
    let start = pair.finiteness_onset().ok_or_else(|| {
        InputError("the pairing lengths are not eventually finite within the horizon".into())
    })?;
    let vals = lens[start..]
        .iter()
        .map(|l| l.clone().expect("finite after the onset"))
        .collect();
    Ok((start, vals))
}

fn pair_fit(pf: &ProblemFile, pair: &Pairing) -> Result<(usize, Vec<BigInt>, SeriesFit), InputError> {
    let (start, vals) = pair_lengths(pair)?;
    let fit = fit_series(&vals, start, pf.ring.codim(), pf.ring.nvars())?;
    Ok((start, vals, fit))
}

fn resolution_for(pf: &ProblemFile, name: &str, steps: usize) -> Result<Resolution, InputError> {
    let m = module(pf, name)?;
    Ok(resolve(m, steps))
}

fn hf_window(report: &mut Report, m: &Presentation, horizon: usize) {
    let hs = m.series();
    let lo = m.gen_twists.iter().copied().min().unwrap_or(0).min(0);
    let hi = lo + horizon as i64;
    report.push("degrees", format!("{lo}..{hi}"));
    report.push_seq("values", (lo..=hi).map(|d| hs.hf(d)));
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.cmd {
        Cmd::Groebner { gens, over } => {
            let pf = load(cli)?;
            let base = parse_base(over)?;
            let fam = parse_gens(&pf, gens)?;
            let gb = pf.ring.gb(base, &[0], &fam);
            let mut rep = Report::new("groebner", over.clone());
            rep.push("input", fam.len());
            rep.push("partial", gb.partial);
            let mut lines: Vec<String> = gb
                .elements
                .iter()
                .map(|e| render_poly(&e.comps[0], pf.ring.ctx()))
                .collect();
            lines.sort();
            rep.push("size", lines.len());
            for (i, l) in lines.iter().enumerate() {
                rep.push(format!("basis[{i}]"), l);
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Nf { gens, of, over } => {
            let pf = load(cli)?;
            let base = parse_base(over)?;
            let fam = parse_gens(&pf, gens)?;
            let p = parse_poly(of, pf.ring.ctx()).map_err(|e| e.to_string())?;
            let v = cihom::freemod::PolyVec { comps: vec![p] };
            let nf = pf.ring.normal_form(base, &[0], &fam, &v);
            let mut rep = Report::new("nf", of.clone());
            rep.push("normal form", render_poly(&nf.comps[0], pf.ring.ctx()));
            rep.push("member", nf.is_zero());
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Syzygies { gens, over } => {
            let pf = load(cli)?;
            let base = parse_base(over)?;
            let fam = parse_gens(&pf, gens)?;
            let twists: Vec<i64> = vec![0];
            let syz = pf.ring.syzygies(base, &twists, &fam);
            // Trim the raw generating set to a minimal one before printing.
            let gen_degs: Vec<i64> = fam
                .iter()
                .map(|g| g.homogeneous_degree(pf.ring.ctx(), &twists).unwrap_or(0))
                .collect();
            let kept = pf
                .ring
                .minimal_generators(base, &gen_degs, &syz, &[]);
            let mut rep = Report::new("syzygies", over.clone());
            rep.push("family", fam.len());
            rep.push("count", kept.len());
            for (i, &idx) in kept.iter().enumerate() {
                rep.push(
                    format!("syzygy[{i}]"),
                    render_vec(&syz[idx], pf.ring.ctx()),
                );
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Hilbert { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let hs = m.series();
            let mut rep = Report::new("hilbert", name.clone());
            rep.push("numerator", hs.num.render());
            rep.push_seq("denominator weights", pf.ring.ctx().weights.iter());
            hf_window(&mut rep, m, effective_horizon(cli, &pf));
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Dim { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let mut rep = Report::new("dim", name.clone());
            rep.push("dim", m.dim());
            rep.push("ring dim", pf.ring.dim());
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Depth { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let mut rep = Report::new("depth", name.clone());
            match depth(m) {
                Some(d) => rep.push("depth", d),
                None => rep.push("depth", "infinite (zero module)"),
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Length { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let mut rep = Report::new("length", name.clone());
            rep.push("length", show_length(&m.length()));
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Present { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?.minimal_presentation();
            let mut rep = Report::new("present", name.clone());
            rep.push("generators", m.ngens());
            rep.push_seq("generator degrees", m.gen_twists.iter());
            rep.push("relations", m.nrels());
            rep.push_seq("relation degrees", m.rel_twists.iter());
            rep.push("matrix", render_matrix(&m.matrix, pf.ring.ctx()));
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Dual { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let d = m.dual();
            let mut rep = Report::new("dual", name.clone());
            rep.push("generators", d.pres.ngens());
            rep.push_seq("generator degrees", d.pres.gen_twists.iter());
            rep.push("relations", d.pres.nrels());
            rep.push("matrix", render_matrix(&d.pres.matrix, pf.ring.ctx()));
            rep.push(
                "embedding",
                render_matrix(&d.inclusion, pf.ring.ctx()),
            );
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Torsionfree { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let (tf, witness) = m.torsion_free();
            let mut rep = Report::new("torsionfree", name.clone());
            rep.push("torsion-free", tf);
            if let Some(w) = witness {
                rep.push("torsion witness", render_vec(&w, pf.ring.ctx()));
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Pushforward { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let p = m.pushforward();
            let mut rep = Report::new("pushforward", name.clone());
            rep.push("generators", p.ngens());
            rep.push_seq("generator degrees", p.gen_twists.iter());
            rep.push("relations", p.nrels());
            rep.push("matrix", render_matrix(&p.matrix, pf.ring.ctx()));
            match depth(&p) {
                Some(d) => rep.push("depth", d),
                None => rep.push("depth", "infinite (zero module)"),
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Annihilator { module: name } => {
            let pf = load(cli)?;
            let m = module(&pf, name)?;
            let ann = m.annihilator();
            let mut rep = Report::new("annihilator", name.clone());
            let mut lines: Vec<String> = ann
                .iter()
                .map(|p| render_poly(p, pf.ring.ctx()))
                .collect();
            lines.sort();
            rep.push("size", lines.len());
            for (i, l) in lines.iter().enumerate() {
                rep.push(format!("gen[{i}]"), l);
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Colon { gens, of, over } => {
            let pf = load(cli)?;
            let base = parse_base(over)?;
            let fam = parse_gens(&pf, gens)?;
            let p = parse_poly(of, pf.ring.ctx()).map_err(|e| e.to_string())?;
            let v = cihom::freemod::PolyVec { comps: vec![p] };
            let c = colon_ideal(&pf.ring, base, &[0], &fam, &v);
            let mut rep = Report::new("colon", of.clone());
            let mut lines: Vec<String> =
                c.iter().map(|q| render_poly(q, pf.ring.ctx())).collect();
            lines.sort();
            rep.push("size", lines.len());
            for (i, l) in lines.iter().enumerate() {
                rep.push(format!("gen[{i}]"), l);
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Tensor { m, n } => {
            let pf = load(cli)?;
            let a = module(&pf, m)?;
            let b = module(&pf, n)?;
            let t = a.tensor(b);
            let mut rep = Report::new("tensor", format!("{m},{n}"));
            rep.push("length", show_length(&t.length()));
            hf_window(&mut rep, &t, effective_horizon(cli, &pf));
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Resolve {
            module: name,
            steps,
        } => {
            let pf = load(cli)?;
            let h = steps.unwrap_or_else(|| effective_horizon(cli, &pf));
            let res = resolution_for(&pf, name, h)?;
            let mut rep = Report::new("resolve", name.clone());
            rep.push("steps computed", res.twists.len() - 1);
            rep.push("complete", res.complete);
            match res.pd() {
                Some(p) => rep.push("projective dimension", p),
                None => rep.push("projective dimension", format!("> {}", res.twists.len() - 1)),
            }
            let betti: Vec<String> = (0..res.twists.len())
                .map(|i| res.betti(i).map(|b| b.to_string()).unwrap_or_default())
                .collect();
            rep.push_seq("betti", betti);
            for (i, tw) in res.twists.iter().enumerate() {
                rep.push(
                    format!("degrees[{i}]"),
                    tw.iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                );
            }
            let minimal = res.is_minimal();
            let complex = res.verify_complex();
            let exact = res.verify_exactness();
            rep.push("minimal", minimal);
            rep.push("complex", complex);
            rep.push("exact", exact);
            Ok(Outcome::Ok(rep, minimal && complex && exact))
        }
        Cmd::Betti {
            module: name,
            steps,
        } => {
            let pf = load(cli)?;
            let h = steps.unwrap_or_else(|| effective_horizon(cli, &pf));
            let res = resolution_for(&pf, name, h)?;
            let mut rep = Report::new("betti", name.clone());
            let betti: Vec<String> = (0..res.twists.len())
                .map(|i| res.betti(i).map(|b| b.to_string()).unwrap_or_default())
                .collect();
            rep.push_seq("betti", betti);
            rep.push("complete", res.complete);
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Mf { module: name } => {
            let pf = load(cli)?;
            if pf.ring.codim() != 1 {
                return Err("matrix factorizations need a ring with exactly one relation"
                    .to_string()
                    .into());
            }
            let h = effective_horizon(cli, &pf);
            let res = resolution_for(&pf, name, h.max(4))?;
            let mut rep = Report::new("mf", name.clone());
            match matrix_factorization(&res) {
                Ok(mf) => {
                    rep.push("onset", mf.onset);
                    rep.push("size", mf.a.cols());
                    rep.push("first factor", render_matrix(&mf.a, pf.ring.ctx()));
                    rep.push("second factor", render_matrix(&mf.b, pf.ring.ctx()));
                    rep.push("verified", "both products equal f times the identity");
                    Ok(Outcome::Ok(rep, true))
                }
                Err(e) => {
                    rep.push("error", e);
                    Ok(Outcome::Ok(rep, false))
                }
            }
        }
        Cmd::Operators {
            module: name,
            index,
        } => {
            let pf = load(cli)?;
            if pf.ring.codim() == 0 {
                return Err("cohomology operators need at least one relation"
                    .to_string()
                    .into());
            }
            let h = effective_horizon(cli, &pf);
            let res = resolution_for(&pf, name, h.max(*index + 3))?;
            let ops = eisenbud_operators(&res);
            let mut rep = Report::new("operators", name.clone());
            rep.push("count", ops.ops.len());
            for (j, family) in ops.ops.iter().enumerate() {
                if let Some(mat) = family.get(*index) {
                    rep.push(
                        format!("t[{}] at index {}", j + 1, index),
                        render_matrix(mat, pf.ring.ctx()),
                    );
                }
            }
            let chain = ops.verify_chain_maps(&res);
            rep.push("chain maps", chain);
            Ok(Outcome::Ok(rep, chain))
        }
        Cmd::Tor { pair, m, n } => {
            let pf = load(cli)?;
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let pairing = Pairing::new(a, b, h);
            let lens = pairing.lengths();
            let mut rep = Report::new("tor", subj);
            rep.push("horizon", h);
            rep.push_seq("lengths", lens.iter().map(show_length));
            match pairing.finiteness_onset() {
                Some(s) => rep.push("finiteness onset", s),
                None => rep.push("finiteness onset", "beyond horizon"),
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Ext { pair, m, n } => {
            let pf = load(cli)?;
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let exts = ext_modules(a, b, h);
            let mut rep = Report::new("ext", subj);
            rep.push("horizon", h);
            rep.push_seq("lengths", exts.iter().map(|e| show_length(&e.length())));
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Fit { pair, m, n } => {
            let pf = load(cli)?;
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let pairing = Pairing::new(a, b, h);
            let (start, vals, fit) = pair_fit(&pf, &pairing)?;
            let mut rep = Report::new("fit", subj);
            rep.push("window start", start);
            rep.push_seq("window", vals.iter());
            rep.push("pole order at 1", fit.c);
            rep.push("pole order at -1", fit.d);
            rep.push("numerator", fit.p.render());
            rep.push("leading mean", &fit.m0);
            rep.push("leading alternation", &fit.n0);
            rep.push("onset", fit.onset);
            rep.push("certified", fit.certified);
            rep.push("stable", fit.stable);
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Eta { pair, m, n, e } => {
            let pf = load(cli)?;
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let r = pf.ring.codim();
            let pairing = Pairing::new(a, b, h);
            let (start, vals, fit) = pair_fit(&pf, &pairing)?;
            let order = e.unwrap_or(r);
            let value = eta(&fit, order)?;
            let mut rep = Report::new("eta", subj);
            rep.push("order", order);
            rep.push("eta", &value);
            rep.push("certified", fit.certified);
            // Scan the observed lengths against the vanishing-gap rule and
            // the dimension-based vanishing bound.
            let top_zero = eta(&fit, r).map(|v| v.is_zero()).unwrap_or(false);
            let mut violations = rigidity_violations(&vals, start, r, top_zero);
            let finite = pairing.tor[0].length().is_some();
            violations.extend(dimension_vanishing_violations(a, b, finite, &fit));
            rep.push("violations", violations.len());
            for (i, v) in violations.iter().enumerate() {
                rep.push(format!("violation[{i}]"), v);
            }
            let ok = violations.is_empty();
            Ok(Outcome::Ok(rep, ok))
        }
        Cmd::Theta { pair, m, n } => {
            let pf = load(cli)?;
            if pf.ring.codim() != 1 {
                return Err("theta needs a ring with exactly one relation"
                    .to_string()
                    .into());
            }
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let pairing = Pairing::new(a, b, h);
            let (start, vals, fit) = pair_fit(&pf, &pairing)?;
            let value = theta(&vals, start, &fit)?;
            let mut rep = Report::new("theta", subj);
            rep.push("theta", value);
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Chi { pair, m, n } => {
            let pf = load(cli)?;
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let value = serre_euler(a, b)?;
            let mut rep = Report::new("chi", subj);
            rep.push("chi", value);
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Complexity { module: name, pair } => {
            let pf = load(cli)?;
            let h = effective_horizon(cli, &pf);
            match (name, pair) {
                (Some(name), None) => {
                    let m = module(&pf, name)?;
                    let cx = module_complexity(m, h)?;
                    let mut rep = Report::new("complexity", name.clone());
                    rep.push("complexity", cx);
                    Ok(Outcome::Ok(rep, true))
                }
                (None, Some(p)) => {
                    let (subj, a, b) = select_pair(&pf, &Some(p.clone()), &None, &None)?;
                    let pairing = Pairing::new(a, b, h);
                    let (_, _, fit) = pair_fit(&pf, &pairing)?;
                    let ca = module_complexity(a, h)?;
                    let cb = module_complexity(b, h)?;
                    let mut rep = Report::new("complexity", subj);
                    rep.push("pair complexity", fit.c);
                    rep.push("first module", ca);
                    rep.push("second module", cb);
                    let bounded = fit.c <= ca.min(cb);
                    rep.push("bounded by both", bounded);
                    Ok(Outcome::Ok(rep, bounded))
                }
                _ => Err("give exactly one of --module or --pair".to_string().into()),
            }
        }
        Cmd::Kirby { pair, m, n } => {
            let pf = load(cli)?;
            if pf.ring.codim() == 0 {
                return Err("operator kernels need at least one relation"
                    .to_string()
                    .into());
            }
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let pairing = Pairing::new(a, b, h);
            let ops = eisenbud_operators(&pairing.res);
            let mut rep = Report::new("kirby", subj);
            match pairing.stable_kernel_bound(&ops) {
                Some(bound) => {
                    rep.push("joint kernel bound", bound);
                    rep.push("trivial from", bound + 1);
                }
                None => rep.push("joint kernel bound", "undetermined within horizon"),
            }
            Ok(Outcome::Ok(rep, true))
        }
        Cmd::Exactness {
            pair,
            m,
            n,
            through,
            lo,
            hi,
        } => {
            let pf = load(cli)?;
            if pf.ring.codim() == 0 {
                return Err("the change-of-rings sequence needs at least one relation"
                    .to_string()
                    .into());
            }
            let (subj, a, b) = select_pair(&pf, pair, m, n)?;
            let h = effective_horizon(cli, &pf);
            let window = (lo.unwrap_or(0), hi.unwrap_or(h as i64));
            let report = change_of_rings_report(a, b, *through, window);
            let mut rep = Report::new("exactness", subj);
            rep.push("checked", report.checked);
            rep.push("failures", report.failures.len());
            for (i, f) in report.failures.iter().enumerate() {
                rep.push(format!("failure[{i}]"), f);
            }
            let ok = report.failures.is_empty();
            rep.push("exact", ok);
            Ok(Outcome::Ok(rep, ok))
        }
        Cmd::Ses { name } => {
            let pf = load(cli)?;
            let decl = pf
                .ses
                .get(name)
                .ok_or_else(|| InputError(format!("no sequence named `{name}`")))?;
            let a = module(&pf, &decl.left)?;
            let b = module(&pf, &decl.middle)?;
            let c = module(&pf, &decl.right)?;
            let alpha = pf
                .maps
                .get(&decl.alpha)
                .ok_or_else(|| InputError(format!("no map named `{}`", decl.alpha)))?;
            let beta = pf
                .maps
                .get(&decl.beta)
                .ok_or_else(|| InputError(format!("no map named `{}`", decl.beta)))?;
            let fails = ses_failures(a, b, c, &alpha.matrix, &beta.matrix);
            let mut rep = Report::new("ses", name.clone());
            rep.push(
                "sequence",
                format!("0 -> {} -> {} -> {} -> 0", decl.left, decl.middle, decl.right),
            );
            rep.push("exact", fails.is_empty());
            for (i, f) in fails.iter().enumerate() {
                rep.push(format!("failure[{i}]"), f);
            }
            let ok = fails.is_empty();
            Ok(Outcome::Ok(rep, ok))
        }
        Cmd::Check { suite } => {
            let results = cihom::checks::run_suite(suite)?;
            let mut rep = Report::new("check", suite.clone());
            let mut all_ok = true;
            for r in &results {
                let verdict = if r.passed {
                    "ok".to_string()
                } else {
                    all_ok = false;
                    if r.detail.is_empty() {
                        "FAIL".to_string()
                    } else {
                        format!("FAIL ({})", r.detail)
                    }
                };
                rep.push(format!("{}/{}", r.suite, r.name), verdict);
            }
            rep.push("passed", results.iter().filter(|r| r.passed).count());
            rep.push("failed", results.iter().filter(|r| !r.passed).count());
            Ok(Outcome::Ok(rep, all_ok))
        }
        Cmd::Corpus { name } => match name {
            Some(n) => {
                let text = CORPUS
                    .iter()
                    .find(|(name, _)| name == n)
                    .map(|(_, t)| t.to_string())
                    .ok_or_else(|| InputError(format!("no corpus problem named `{n}`")))?;
                Ok(Outcome::Raw(text))
            }
            None => {
                let mut rep = Report::new("corpus", "embedded problems");
                for (name, text) in CORPUS {
                    let desc = text
                        .lines()
                        .next()
                        .unwrap_or("")
                        .trim_start_matches('#')
                        .trim();
                    rep.push(*name, desc);
                }
                Ok(Outcome::Ok(rep, true))
            }
        },
    }
}

