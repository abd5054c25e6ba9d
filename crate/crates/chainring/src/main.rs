//! Command-line surface over the chainring library.
//!
//! Every subcommand is a thin wrapper: parse the payload, call one library
//! entry point, print text (or JSON with --json). Exit codes: 0 success,
//! 1 domain error (with a machine-readable error object), 2 usage error.

use chainring::code::{Code, DualForm};
use chainring::cyclic::{cyclotomic_cosets, CyclicContext, MultiIndex};
use chainring::error::Error;
use chainring::ext::Tower;
use chainring::ring::Ring;
use chainring::{fixtures, io, verify};
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chainring", version, about = "exact coding theory over finite chain rings")]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect chain rings.
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Galois extensions: towers, trace, Frobenius, dual bases.
    Ext {
        #[command(subcommand)]
        cmd: ExtCmd,
    },
    /// Linear codes: canonical forms, duality, Galois operators.
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// Cyclic codes: cosets, factorizations, defining sets, BCH.
    Cyclic {
        #[command(subcommand)]
        cmd: CyclicCmd,
    },
    /// Run a named verification suite.
    Verify {
        /// One of the registered suites (see `verify list`).
        suite: String,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        ring: Option<String>,
        /// Enumeration guard, in bits.
        #[arg(long)]
        guard: Option<u32>,
    },
}

#[derive(Args)]
struct RingSel {
    /// Named fixture (z4, z8, z9, gr42, gr43, f2u2, f8u2).
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Modulus coefficients, constant term first, comma separated.
    #[arg(long)]
    modulus: Option<String>,
}

impl RingSel {
    fn resolve(&self) -> Result<Ring, Error> {
        if let Some(f) = &self.fixture {
            return fixtures::ring(f);
        }
        let family = chainring::ring::Family::parse(
            self.family
                .as_deref()
                .ok_or_else(|| Error::Parse("need --fixture or --family/--p/--n/--s".into()))?,
        )?;
        let p = self.p.ok_or_else(|| Error::Parse("missing --p".into()))?;
        let n = self.n.ok_or_else(|| Error::Parse("missing --n".into()))?;
        let s = self.s.ok_or_else(|| Error::Parse("missing --s".into()))?;
        let modulus = match &self.modulus {
            None => None,
            Some(text) => Some(
                text.split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient `{c}`")))
                    })
                    .collect::<Result<Vec<u64>, Error>>()?,
            ),
        };
        Ring::make(family, p, n, s, modulus)
    }
}

#[derive(Subcommand)]
enum RingCmd {
    /// Summary of one ring: sizes, residue field, Teichmuller set.
    Show {
        #[command(flatten)]
        sel: RingSel,
    },
    /// The named fixtures.
    List,
}

#[derive(Args)]
struct TowerSel {
    /// Tower fixture (gr42, gr43, f8u2; plain ring names give the trivial
    /// tower).
    #[arg(long)]
    fixture: Option<String>,
    /// Base ring fixture, combined with --m.
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    m: Option<usize>,
}

impl TowerSel {
    fn resolve(&self) -> Result<Tower, Error> {
        match (&self.fixture, &self.base, self.m) {
            (Some(f), _, _) => fixtures::tower(f),
            (None, Some(base), Some(m)) => Tower::extend(&fixtures::ring(base)?, m),
            _ => Err(Error::Parse("need --fixture or --base and --m".into())),
        }
    }
}

#[derive(Subcommand)]
enum ExtCmd {
    /// Construct a tower and print its data.
    Build {
        #[command(flatten)]
        sel: TowerSel,
    },
    /// Trace of an extension element, as a base element.
    Trace {
        #[command(flatten)]
        sel: TowerSel,
        /// Element over the top ring, text encoding.
        #[arg(long)]
        elem: String,
    },
    /// Frobenius sigma^j of an extension element.
    Frobenius {
        #[command(flatten)]
        sel: TowerSel,
        #[arg(long)]
        elem: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// The trace-dual basis.
    Dualbasis {
        #[command(flatten)]
        sel: TowerSel,
    },
}

#[derive(Args)]
struct CodeInput {
    /// Ring fixture for base-ring codes (trivial tower).
    #[arg(long)]
    ring: Option<String>,
    /// Tower fixture for extension codes.
    #[arg(long)]
    fixture: Option<String>,
    /// Generator matrix: rows split by `;`, entries by spaces; `-` reads
    /// stdin (text or a code JSON object).
    #[arg(long)]
    matrix: String,
}

impl CodeInput {
    fn tower(&self) -> Result<Tower, Error> {
        match (&self.ring, &self.fixture) {
            (Some(r), None) => Tower::extend(&fixtures::ring(r)?, 1),
            (None, Some(f)) => fixtures::tower(f),
            _ => Err(Error::Parse("need exactly one of --ring or --fixture".into())),
        }
    }

    fn payload(&self) -> Result<String, Error> {
        if self.matrix == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(buf)
        } else {
            Ok(self.matrix.clone())
        }
    }

    /// Parse the payload as a code over the tower top (text matrix or a
    /// JSON code object).
    fn code(&self) -> Result<Code, Error> {
        let tower = self.tower()?;
        let text = self.payload()?;
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let dto: io::CodeDto =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            let code = io::code_from_dto(&dto)?;
            if code.tower() != &tower {
                return Err(Error::RingMismatch);
            }
            return Ok(code);
        }
        let m = io::parse_matrix_text(tower.top(), trimmed)?;
        Ok(Code::from_matrix(&tower, &m))
    }

    /// Parse the payload as a matrix over the base ring (for extensions).
    fn base_code(&self) -> Result<(Tower, Code), Error> {
        let tower = self.tower()?;
        let text = self.payload()?;
        let m = io::parse_matrix_text(tower.base(), text.trim())?;
        let trivial = Tower::extend(tower.base(), 1)?;
        Ok((tower, Code::from_matrix(&trivial, &m)))
    }
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Row standard form and type of the row span.
    Rsf {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Dual code (Euclidean by default).
    Dual {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long, default_value = "euclidean")]
        form: String,
    },
    /// Restriction to the base ring.
    Res {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Coordinatewise trace code over the base ring.
    Trace {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Extension of a base-ring code to the tower top.
    Ext {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Galois closure.
    Closure {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Galois interior.
    Interior {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Galois invariance (RSF-over-base criterion).
    Invariant {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Join of two codes.
    Sum {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        matrix2: String,
    },
    /// Meet of two codes.
    Intersect {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        matrix2: String,
    },
    /// Level sets and rank bounds.
    Bounds {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Delsarte identity oracle on this code.
    Delsarte {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Args)]
struct CyclicSel {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    ell: u64,
}

impl CyclicSel {
    fn context(&self) -> Result<CyclicContext, Error> {
        CyclicContext::new(&fixtures::ring(&self.ring)?, self.ell)
    }
}

#[derive(Subcommand)]
enum CyclicCmd {
    /// q-cyclotomic cosets modulo ell.
    Cosets {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        q: u64,
    },
    /// Full cyclic context: tower, factors, idempotents.
    Context {
        #[command(flatten)]
        sel: CyclicSel,
    },
    /// Evaluation code B_t(A).
    Eval {
        #[command(flatten)]
        sel: CyclicSel,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Generator polynomial of B(A).
    Genpoly {
        #[command(flatten)]
        sel: CyclicSel,
        #[arg(long)]
        set: String,
    },
    /// The cyclic code of a multi-index (exponents in representative order).
    Multiindex {
        #[command(flatten)]
        sel: CyclicSel,
        #[arg(long)]
        t: String,
    },
    /// Restriction pipelines for a q-invariant defining set.
    Restrict {
        #[command(flatten)]
        sel: CyclicSel,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// BCH designed distance against the exact minimum weight.
    Bch {
        #[command(flatten)]
        sel: CyclicSel,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Exact minimum weight of a code given by a generator matrix.
    Minweight {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        matrix: String,
    },
}

fn print_code(code: &Code, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&io::code_to_dto(code)).expect("serializable")
        );
    } else {
        print!("{}", code.rsf());
        println!("type: {}", io::type_string(code));
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Ring { cmd } => match cmd {
            RingCmd::Show { sel } => {
                let r = sel.resolve()?;
                if json {
                    let gamma: Vec<io::ElementDto> = r
                        .teichmuller_set()
                        .iter()
                        .map(io::element_to_dto)
                        .collect();
                    let obj = serde_json::json!({
                        "ring": io::ring_to_dto(&r),
                        "name": r.name(),
                        "size": r.size().to_string(),
                        "units": r.unit_count().to_string(),
                        "teichmuller": gamma,
                    });
                    println!("{obj}");
                } else {
                    println!("ring: {}", r.name());
                    println!("family: {}", r.family().as_str());
                    println!("p: {}  n: {}  s: {}", r.p(), r.n(), r.s());
                    let mods: Vec<String> =
                        r.modulus().iter().map(|c| c.to_string()).collect();
                    println!("modulus: [{}]", mods.join(", "));
                    println!("size: {}", r.size());
                    println!("units: {}", r.unit_count());
                    println!("residue field: F{}", r.q());
                    let gamma: Vec<String> = r
                        .teichmuller_set()
                        .iter()
                        .map(|e| e.to_string())
                        .collect();
                    println!("teichmuller: {{{}}}", gamma.join(", "));
                }
            }
            RingCmd::List => {
                for name in fixtures::FIXTURE_NAMES {
                    let r = fixtures::ring(name)?;
                    if json {
                        let obj = serde_json::json!({
                            "fixture": name,
                            "ring": io::ring_to_dto(&r),
                            "size": r.size().to_string(),
                        });
                        println!("{obj}");
                    } else {
                        println!(
                            "{name}: {} ({} p={} n={} s={}, size {})",
                            r.name(),
                            r.family().as_str(),
                            r.p(),
                            r.n(),
                            r.s(),
                            r.size()
                        );
                    }
                }
            }
        },
        Cmd::Ext { cmd } => match cmd {
            ExtCmd::Build { sel } => {
                let t = sel.resolve()?;
                if json {
                    println!(
                        "{}",
                        serde_json::to_string(&io::tower_to_dto(&t)).expect("serializable")
                    );
                } else {
                    println!("base: {}", t.base().name());
                    println!("top: {}", t.top().name());
                    println!("m: {}", t.m());
                    let mods: Vec<String> =
                        t.top().modulus().iter().map(|c| c.to_string()).collect();
                    println!("modulus_top: [{}]", mods.join(", "));
                    let alpha: Vec<String> = t.basis().iter().map(|e| e.to_string()).collect();
                    println!("basis: {}", alpha.join(" | "));
                    let dual: Vec<String> =
                        t.dual_basis().iter().map(|e| e.to_string()).collect();
                    println!("dual basis: {}", dual.join(" | "));
                }
            }
            ExtCmd::Trace { sel, elem } => {
                let t = sel.resolve()?;
                let e = t.top().parse_element(elem)?;
                let tr = t.trace(&e);
                if json {
                    println!(
                        "{}",
                        serde_json::to_string(&io::element_to_dto(&tr)).expect("serializable")
                    );
                } else {
                    println!("{tr}");
                }
            }
            ExtCmd::Frobenius { sel, elem, power } => {
                let t = sel.resolve()?;
                let e = t.top().parse_element(elem)?;
                let img = t.frobenius_pow(&e, *power);
                if json {
                    // extension elements in alpha-coordinates over the base
                    let coords: Vec<io::ElementDto> = t
                        .alpha_coordinates(&img)?
                        .iter()
                        .map(io::element_to_dto)
                        .collect();
                    println!("{}", serde_json::json!({ "alpha": coords }));
                } else {
                    println!("{img}");
                }
            }
            ExtCmd::Dualbasis { sel } => {
                let t = sel.resolve()?;
                if json {
                    let list: Vec<Vec<io::ElementDto>> = t
                        .dual_basis()
                        .iter()
                        .map(|e| {
                            t.alpha_coordinates(e)
                                .expect("dual basis has alpha coordinates")
                                .iter()
                                .map(io::element_to_dto)
                                .collect()
                        })
                        .collect();
                    println!("{}", serde_json::json!({ "dual_basis_alpha": list }));
                } else {
                    for (i, e) in t.dual_basis().iter().enumerate() {
                        println!("alpha*_{i}: {e}");
                    }
                }
            }
        },
        Cmd::Code { cmd } => match cmd {
            CodeCmd::Rsf { input } => print_code(&input.code()?, json),
            CodeCmd::Dual { input, form } => {
                let form = match form.as_str() {
                    "euclidean" => DualForm::Euclidean,
                    "hermitian" => DualForm::Hermitian,
                    other => return Err(Error::Parse(format!("unknown form `{other}`"))),
                };
                print_code(&input.code()?.dual(form)?, json);
            }
            CodeCmd::Res { input } => print_code(&input.code()?.restriction(), json),
            CodeCmd::Trace { input } => print_code(&input.code()?.trace_code(), json),
            CodeCmd::Ext { input } => {
                let (tower, base_code) = input.base_code()?;
                print_code(&base_code.extend_to(&tower)?, json);
            }
            CodeCmd::Closure { input } => print_code(&input.code()?.closure(), json),
            CodeCmd::Interior { input } => print_code(&input.code()?.interior(), json),
            CodeCmd::Invariant { input } => {
                let inv = input.code()?.is_galois_invariant();
                if json {
                    println!("{}", serde_json::json!({ "galois_invariant": inv }));
                } else {
                    println!("{inv}");
                }
            }
            CodeCmd::Sum { input, matrix2 } => {
                let a = input.code()?;
                let m2 = io::parse_matrix_text(a.ring(), matrix2)?;
                let b = Code::from_matrix(a.tower(), &m2);
                print_code(&a.sum(&b)?, json);
            }
            CodeCmd::Intersect { input, matrix2 } => {
                let a = input.code()?;
                let m2 = io::parse_matrix_text(a.ring(), matrix2)?;
                let b = Code::from_matrix(a.tower(), &m2);
                print_code(&a.intersect(&b)?, json);
            }
            CodeCmd::Bounds { input } => {
                let code = input.code()?;
                let rep = code.bounds_report()?;
                if json {
                    let chain: Vec<_> = rep
                        .chain
                        .iter()
                        .map(|i| {
                            serde_json::json!({
                                "name": i.name, "lhs": i.lhs, "rhs": i.rhs, "holds": i.holds
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "level_set": rep.level_set,
                            "dual_level_set": rep.dual_level_set,
                            "rank_code": rep.rank_code,
                            "rank_interior": rep.rank_interior,
                            "rank_closure": rep.rank_closure,
                            "rank_restriction": rep.rank_restriction,
                            "rank_trace": rep.rank_trace,
                            "chain": chain,
                        })
                    );
                } else {
                    println!("level set: {:?}", rep.level_set);
                    println!("dual level set: {:?}", rep.dual_level_set);
                    println!(
                        "ranks: code {} interior {} closure {} restriction {} trace {}",
                        rep.rank_code,
                        rep.rank_interior,
                        rep.rank_closure,
                        rep.rank_restriction,
                        rep.rank_trace
                    );
                    for i in &rep.chain {
                        println!("  {}: {} <= {}", i.name, i.lhs, i.rhs);
                    }
                    for i in &rep.literal_bounds {
                        println!(
                            "  [data] {}: {} <= {} ({})",
                            i.name,
                            i.lhs,
                            i.rhs,
                            if i.holds { "holds" } else { "fails" }
                        );
                    }
                }
            }
            CodeCmd::Delsarte { input } => {
                let rep = input.code()?.delsarte_check()?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "lhs": io::code_to_dto(&rep.lhs),
                            "rhs": io::code_to_dto(&rep.rhs),
                            "equal": rep.equal,
                        })
                    );
                } else {
                    println!("Tr(dual(B)):");
                    print!("{}", rep.lhs.rsf());
                    println!("dual(Res(B)):");
                    print!("{}", rep.rhs.rsf());
                    println!("equal: {}", rep.equal);
                }
            }
        },
        Cmd::Cyclic { cmd } => match cmd {
            CyclicCmd::Cosets { ell, q } => {
                let t = cyclotomic_cosets(*ell, *q)?;
                if json {
                    let cosets: Vec<Vec<u64>> =
                        t.reps.iter().map(|r| t.cosets[r].clone()).collect();
                    println!("{}", serde_json::json!({ "ell": ell, "q": q, "cosets": cosets }));
                } else {
                    let parts: Vec<String> = t
                        .reps
                        .iter()
                        .map(|r| {
                            let mut sorted = t.cosets[r].clone();
                            sorted.sort_unstable();
                            let xs: Vec<String> =
                                sorted.iter().map(|x| x.to_string()).collect();
                            format!("{{{}}}", xs.join(","))
                        })
                        .collect();
                    println!("{}", parts.join(" "));
                }
            }
            CyclicCmd::Context { sel } => {
                let ctx = sel.context()?;
                if json {
                    println!(
                        "{}",
                        serde_json::to_string(&io::context_to_dto(&ctx)).expect("serializable")
                    );
                } else {
                    println!("ring: {}", ctx.ring().name());
                    println!("ell: {}", ctx.ell());
                    println!("m: {}", ctx.tower().m());
                    println!("splitting ring: {}", ctx.tower().top().name());
                    println!("xi: {}", ctx.xi());
                    for (rep, f) in ctx.factors() {
                        println!("Lambda_{rep}: {f}");
                    }
                    for (rep, e) in ctx.idempotents() {
                        println!("e_{rep}: {e}");
                    }
                }
            }
            CyclicCmd::Eval { sel, set, t } => {
                let ctx = sel.context()?;
                let a = io::parse_defining_set(sel.ell, set)?;
                print_code(&ctx.eval_code(&a, *t)?, json);
            }
            CyclicCmd::Genpoly { sel, set } => {
                let ctx = sel.context()?;
                let a = io::parse_defining_set(sel.ell, set)?;
                let g = ctx.generator_polynomial(&a)?;
                if json {
                    let coeffs: Vec<io::ElementDto> =
                        g.coeffs().iter().map(io::element_to_dto).collect();
                    println!("{}", serde_json::json!({ "coeffs": coeffs }));
                } else {
                    println!("{g}");
                }
            }
            CyclicCmd::Multiindex { sel, t } => {
                let ctx = sel.context()?;
                let exps: Vec<usize> = t
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad exponent `{x}`")))
                    })
                    .collect::<Result<_, Error>>()?;
                if exps.len() != ctx.table().reps.len() {
                    return Err(Error::LengthMismatch {
                        expected: ctx.table().reps.len(),
                        got: exps.len(),
                    });
                }
                let map: BTreeMap<u64, usize> = ctx
                    .table()
                    .reps
                    .iter()
                    .copied()
                    .zip(exps)
                    .collect();
                let mi = MultiIndex::new(ctx.table(), ctx.ring().s(), map)?;
                print_code(&ctx.code_from_multiindex(&mi)?, json);
            }
            CyclicCmd::Restrict { sel, set, t } => {
                let ctx = sel.context()?;
                let a = io::parse_defining_set(sel.ell, set)?;
                let rep = ctx.restricted_code(&a, *t)?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "code": io::code_to_dto(&rep.code),
                            "pipelines_agree": true,
                        })
                    );
                } else {
                    print_code(&rep.code, false);
                    println!("pipelines: trace-dual = dual-restriction = eval-restriction");
                }
            }
            CyclicCmd::Bch { sel, set, t } => {
                let ctx = sel.context()?;
                let a = io::parse_defining_set(sel.ell, set)?;
                let rep = ctx.bch_check(&a, *t)?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "interval": rep.interval,
                            "is_interval": rep.is_interval,
                            "is_q_invariant": rep.is_q_invariant,
                            "designed_distance": rep.designed_distance,
                            "exact_distance": rep.exact_distance,
                            "holds": rep.holds,
                        })
                    );
                } else {
                    println!(
                        "interval: w={} u={} v={}",
                        rep.interval.0, rep.interval.1, rep.interval.2
                    );
                    println!("designed distance: {}", rep.designed_distance);
                    match rep.exact_distance {
                        Some(d) => println!("exact distance: {d}"),
                        None => println!("exact distance: (zero code)"),
                    }
                    println!("holds: {}", rep.holds);
                }
            }
            CyclicCmd::Minweight { ring, matrix } => {
                let r = fixtures::ring(ring)?;
                let tower = Tower::extend(&r, 1)?;
                let m = io::parse_matrix_text(&r, matrix)?;
                let code = Code::from_matrix(&tower, &m);
                let d = code.min_weight()?;
                if json {
                    println!("{}", serde_json::json!({ "min_weight": d }));
                } else {
                    println!("{d}");
                }
            }
        },
        Cmd::Verify {
            suite,
            fixture,
            cases,
            seed,
            ell,
            ring,
            guard,
        } => {
            let params = verify::SuiteParams {
                fixture: fixture.clone(),
                ring: ring.clone(),
                ell: *ell,
                cases: *cases,
                seed: *seed,
                guard: guard.map(|b| 1u128 << b).unwrap_or(chainring::DEFAULT_ENUM_GUARD),
            };
            let report = verify::run_suite(suite, &params)?;
            print!("{}", report.render());
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            // UnknownSuite is a usage error (exit 2); other domain errors
            // exit 1 with a machine-readable object.
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "error": e.name(), "detail": e.to_string() })
                );
            } else {
                eprintln!("error[{}]: {e}", e.name());
            }
            match e {
                Error::UnknownSuite(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
