//! `opsplit`: exact verification and construction of algebra splittings.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 input or usage error.

mod demo;

use opsplit_cli::file;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use opsplit_core::algebra::{
    check_relations_capped, is_representation, Algebra, RelationSet, Rep,
};
use opsplit_core::averaging::{
    check_admissible, check_averaging, endo_double, induced_leibniz, sdpl_from_admissible,
    AveragingLieAlgebra,
};
use opsplit_core::bialgebra::{
    build_leibniz_double, build_sdpl_double, check_avg_lie_bialgebra,
    check_avg_lie_bialgebra_via_double, check_leibniz_coalgebra, check_lie_bialgebra,
    check_sdpl_coalgebra, induce_sdpl_bialgebra, lie_double, manin_chain_verdicts,
    avg_manin_to_leibniz_manin, sdpl_bialgebra_verdict, AvgLieBialgebra, Comult,
};
use opsplit_core::leibniz::check_sdpl;
use opsplit_core::linalg::{Matrix, Tensor3};
use opsplit_core::scalar;
use opsplit_core::splitting::{
    check_o_operator, check_strong, check_type_m_invariance, check_type_m_pre,
    check_type_m_rota_baxter, classify_o_operator, induce_splitting_on_v, splitting_from_form,
    BilinearForm, SplitAlgebra, TypeMatrix,
};

use opsplit_cli::file::ParsedFile;
use opsplit_cli::report::CheckReport;

const DEFAULT_CAP: usize = 100;

#[derive(Parser)]
#[command(name = "opsplit", version, about = "Exact splitting verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify identities of the structures in an algebra file.
    Check(CheckArgs),
    /// Build a derived structure and write it as an algebra file.
    Construct(ConstructArgs),
    /// Build a double algebra from a pair of halves.
    Double(DoubleArgs),
    /// Run a bundled end-to-end demonstration (`sl2`).
    Demo {
        /// Demo name; only `sl2` is bundled.
        target: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Leibniz,
    Lie,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Relations,
    Rep,
    TypeMPre,
    OOperator,
    RotaBaxter,
    Invariance,
    Sdpl,
    Averaging,
    Admissible,
    Coalgebra,
    Bialgebra,
    Manin,
    AvgBialgebra,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    SplitFromForm,
    SplitFromOperator,
    SdplFromAdmissible,
    InduceBialgebra,
    EndoDouble,
    LeibnizFromAveraging,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DoubleKind {
    Leibniz,
    Sdpl,
    Lie,
    Avg,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    kind: CheckKind,
    /// Algebra file to check.
    file: PathBuf,
    /// Multiplication name (default `circ`, or `bracket` in Lie contexts).
    #[arg(long)]
    mult: Option<String>,
    /// Relation preset for generic checks.
    #[arg(long, value_enum, default_value_t = Preset::Leibniz)]
    preset: Preset,
    /// Type matrix: `a`, `b`, `l`, `i`, or `a1,b1,a2,b2` with rationals.
    #[arg(long)]
    m: Option<String>,
    /// Use the dualized combined pair.
    #[arg(long)]
    dual: bool,
    /// Additionally require strongness.
    #[arg(long)]
    strong: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: ConstructKind,
    file: PathBuf,
    #[arg(long)]
    mult: Option<String>,
    #[arg(long)]
    m: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DoubleArgs {
    #[arg(long, value_enum)]
    kind: DoubleKind,
    file: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

struct CliError(String);

impl From<opsplit_core::Error> for CliError {
    fn from(e: opsplit_core::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<file::FileError> for CliError {
    fn from(e: file::FileError) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Check(args) => run_check(&args),
        Cmd::Construct(args) => run_construct(&args),
        Cmd::Double(args) => run_double(&args),
        Cmd::Demo { target } => return run_demo(&target),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn run_demo(target: &str) -> i32 {
    match target {
        "sl2" => demo::sl2(),
        other => {
            eprintln!("error: unknown demo `{other}` (only `sl2` is bundled)");
            2
        }
    }
}

// --- shared plumbing --------------------------------------------------

fn load(path: &PathBuf) -> CliResult<ParsedFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    file::parse(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn violation_cap() -> CliResult<usize> {
    match std::env::var("OPSPLIT_VIOLATION_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError(format!("OPSPLIT_VIOLATION_CAP: invalid value `{v}`"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn parse_type_matrix(spec: Option<&str>) -> CliResult<TypeMatrix> {
    let Some(spec) = spec else {
        return Ok(TypeMatrix::identity());
    };
    match spec {
        "a" => return Ok(TypeMatrix::type_a()),
        "b" => return Ok(TypeMatrix::type_b()),
        "l" => return Ok(TypeMatrix::type_l()),
        "i" => return Ok(TypeMatrix::identity()),
        _ => {}
    }
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError(format!(
            "--m: expected `a`, `b`, `l`, `i`, or four comma-separated rationals, got `{spec}`"
        )));
    }
    let mut vals = Vec::with_capacity(4);
    for p in parts {
        vals.push(scalar::parse(p).map_err(|e| CliError(format!("--m: {e}")))?);
    }
    Ok(TypeMatrix::new(
        vals[0].clone(),
        vals[1].clone(),
        vals[2].clone(),
        vals[3].clone(),
    ))
}

trait FileExt {
    fn tensor(&self, name: &str) -> CliResult<&Tensor3>;
    fn form(&self, name: &str) -> CliResult<BilinearForm>;
    fn map(&self, name: &str) -> CliResult<&Matrix>;
    fn comult(&self, name: &str) -> CliResult<&Comult>;
    fn algebra(&self, mult: &str) -> CliResult<Algebra>;
    fn split(&self, succ: &str, prec: &str) -> CliResult<SplitAlgebra>;
    fn family(&self, name: &str) -> CliResult<Vec<Matrix>>;
}

impl FileExt for ParsedFile {
    fn tensor(&self, name: &str) -> CliResult<&Tensor3> {
        self.mults
            .get(name)
            .ok_or_else(|| CliError(format!("missing multiplication `{name}`")))
    }

    fn form(&self, name: &str) -> CliResult<BilinearForm> {
        self.forms
            .get(name)
            .map(|m| BilinearForm::new(m.clone()))
            .ok_or_else(|| CliError(format!("missing form `{name}`")))
    }

    fn map(&self, name: &str) -> CliResult<&Matrix> {
        self.maps
            .get(name)
            .ok_or_else(|| CliError(format!("missing map `{name}`")))
    }

    fn comult(&self, name: &str) -> CliResult<&Comult> {
        self.comults
            .get(name)
            .ok_or_else(|| CliError(format!("missing comultiplication `{name}`")))
    }

    fn algebra(&self, mult: &str) -> CliResult<Algebra> {
        Ok(Algebra::new(self.dim).with_mult(mult, self.tensor(mult)?.clone()))
    }

    fn split(&self, succ: &str, prec: &str) -> CliResult<SplitAlgebra> {
        Ok(SplitAlgebra::new(
            self.tensor(succ)?.clone(),
            self.tensor(prec)?.clone(),
        )?)
    }

    /// A rank-3 tensor read as a basis-indexed family of matrices
    /// (`family[i]` has entries `t[i][r][c]`).
    fn family(&self, name: &str) -> CliResult<Vec<Matrix>> {
        let t = self.tensor(name)?;
        let n = self.dim;
        Ok((0..n)
            .map(|i| Matrix::from_fn(n, n, |r, c| t.at(i, r, c).clone()))
            .collect())
    }
}

fn relation_set(preset: Preset) -> RelationSet {
    match preset {
        Preset::Leibniz => RelationSet::leibniz(),
        Preset::Lie => RelationSet::lie(),
    }
}

fn default_mult(args: &CheckArgs) -> String {
    if let Some(m) = &args.mult {
        return m.clone();
    }
    let lie_context = args.preset == Preset::Lie
        || matches!(
            args.kind,
            CheckKind::Averaging | CheckKind::Admissible | CheckKind::AvgBialgebra
        );
    if lie_context { "bracket" } else { "circ" }.to_string()
}

// --- check ------------------------------------------------------------

fn run_check(args: &CheckArgs) -> CliResult<i32> {
    let start = Instant::now();
    let parsed = load(&args.file)?;
    let mult = default_mult(args);
    let rs = relation_set(args.preset);
    let mut report = CheckReport::new("check");

    match args.kind {
        CheckKind::Relations => {
            let a = parsed.algebra(&mult)?;
            let vr = check_relations_capped(&a, &mult, &rs, violation_cap()?)?;
            report.absorb("relations", &vr);
        }
        CheckKind::Rep => {
            let a = parsed.algebra(&mult)?;
            let rep = Rep {
                vdim: parsed.dim,
                left: parsed.family("l")?,
                right: parsed.family("r")?,
            };
            let vr = is_representation(&a, &mult, &rs, &rep)?;
            report.absorb("representation", &vr);
        }
        CheckKind::TypeMPre => {
            let sp = parsed.split("succ", "prec")?;
            let m = parse_type_matrix(args.m.as_deref())?;
            let vr = check_type_m_pre(&sp, &rs, &m, args.dual)?;
            report.absorb("type-m-pre", &vr);
        }
        CheckKind::OOperator => {
            let a = parsed.algebra(&mult)?;
            let alpha = parsed.family("alpha")?;
            let beta = parsed.family("beta")?;
            let t = parsed.map("t")?;
            let raw = check_o_operator(&a, &mult, &alpha, &beta, t)?;
            report.verdict("operator", raw);
            if args.m.is_some() {
                let m = parse_type_matrix(args.m.as_deref())?;
                let classified =
                    classify_o_operator(&a, &mult, &rs, &alpha, &beta, t, &m, args.dual)?;
                report.verdict("classified", classified);
            }
            if args.strong {
                let strong = raw && check_strong(&a, &mult, &rs, &alpha, &beta, t)?;
                report.verdict("strong", strong);
            }
        }
        CheckKind::RotaBaxter => {
            let a = parsed.algebra(&mult)?;
            let r = parsed.map("r")?;
            let m = parse_type_matrix(args.m.as_deref())?;
            let raw = check_type_m_rota_baxter(&a, &mult, &rs, r, &m, false)?;
            report.verdict("rota-baxter", raw);
            if args.strong {
                report.verdict(
                    "strong",
                    check_type_m_rota_baxter(&a, &mult, &rs, r, &m, true)?,
                );
            }
        }
        CheckKind::Invariance => {
            let a = parsed.algebra(&mult)?;
            let b = parsed.form("b")?;
            let m = parse_type_matrix(args.m.as_deref())?;
            report.verdict("invariance", check_type_m_invariance(&a, &mult, &b, &m)?);
        }
        CheckKind::Sdpl => {
            let sp = parsed.split("succ", "prec")?;
            report.verdict("sdpl", check_sdpl(&sp)?);
        }
        CheckKind::Averaging => {
            let a = parsed.algebra(&mult)?;
            report.verdict("averaging", check_averaging(&a, parsed.map("p")?)?);
        }
        CheckKind::Admissible => {
            let a = parsed.algebra(&mult)?;
            report.verdict(
                "admissible",
                check_admissible(&a, parsed.map("p")?, parsed.map("q")?)?,
            );
        }
        CheckKind::Coalgebra => {
            if parsed.comults.contains_key("vartheta") {
                report.verdict(
                    "sdpl-coalgebra",
                    check_sdpl_coalgebra(parsed.comult("vartheta")?, parsed.comult("theta")?),
                );
            } else {
                report.verdict(
                    "leibniz-coalgebra",
                    check_leibniz_coalgebra(parsed.comult("eta")?),
                );
            }
        }
        CheckKind::Bialgebra => {
            if parsed.comults.contains_key("delta") {
                let a = parsed.algebra("bracket")?;
                report.verdict(
                    "lie-bialgebra",
                    check_lie_bialgebra(&a, parsed.comult("delta")?)?,
                );
            } else {
                let sp = parsed.split("succ", "prec")?;
                report.verdict(
                    "sdpl-bialgebra",
                    sdpl_bialgebra_verdict(
                        &sp,
                        parsed.comult("vartheta")?,
                        parsed.comult("theta")?,
                    )?,
                );
            }
        }
        CheckKind::Manin => {
            let sa = parsed.split("succ", "prec")?;
            let sastar = parsed.split("succ_star", "prec_star")?;
            let v = manin_chain_verdicts(&sa, &sastar)?;
            report.verdict("bialgebra", v.bialgebra);
            report.verdict("leibniz-manin", v.leibniz_manin);
            report.verdict("sdpl-manin", v.sdpl_manin);
            report.verdict("double-leibniz", v.double_leibniz);
            report.verdict("double-sdpl", v.double_sdpl);
        }
        CheckKind::AvgBialgebra => {
            let b = avg_bialgebra_input(&parsed, &mult)?;
            report.verdict("avg-lie-bialgebra", check_avg_lie_bialgebra(&b)?);
            report.verdict("via-double", check_avg_lie_bialgebra_via_double(&b)?);
        }
    }

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    let ok = report.all_ok();
    print!("{}", report.emit(args.format == Format::Json));
    Ok(if ok { 0 } else { 1 })
}

fn avg_bialgebra_input(parsed: &ParsedFile, mult: &str) -> CliResult<AvgLieBialgebra> {
    let delta = match parsed.comults.get("delta") {
        Some(c) => c.clone(),
        None => Comult::zero(parsed.dim),
    };
    Ok(AvgLieBialgebra {
        lie: parsed.algebra(mult)?,
        delta,
        p: parsed.map("p")?.clone(),
        q: parsed.map("q")?.clone(),
    })
}

// --- construct / double ------------------------------------------------

fn write_output(out: &Option<PathBuf>, result: &ParsedFile) -> CliResult<()> {
    let text = file::to_json(&file::to_file(result));
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn empty_output(dim: usize) -> ParsedFile {
    ParsedFile {
        dim,
        basis: None,
        mults: BTreeMap::new(),
        forms: BTreeMap::new(),
        maps: BTreeMap::new(),
        comults: BTreeMap::new(),
    }
}

fn split_output(sp: &SplitAlgebra) -> ParsedFile {
    let mut out = empty_output(sp.dim());
    out.mults.insert("succ".into(), sp.succ().clone());
    out.mults.insert("prec".into(), sp.prec().clone());
    out.mults.insert("circ".into(), sp.circ().clone());
    out
}

fn run_construct(args: &ConstructArgs) -> CliResult<i32> {
    let parsed = load(&args.file)?;
    let result = match args.kind {
        ConstructKind::SplitFromForm => {
            let mult = args.mult.clone().unwrap_or_else(|| "circ".into());
            let a = parsed.algebra(&mult)?;
            let b = parsed.form("b")?;
            let m = parse_type_matrix(args.m.as_deref())?;
            split_output(&splitting_from_form(
                &a,
                &mult,
                &RelationSet::leibniz(),
                &b,
                &m,
            )?)
        }
        ConstructKind::SplitFromOperator => {
            let mult = args.mult.clone().unwrap_or_else(|| "circ".into());
            let a = parsed.algebra(&mult)?;
            let alpha = parsed.family("alpha")?;
            let beta = parsed.family("beta")?;
            split_output(&induce_splitting_on_v(
                &a,
                &mult,
                &alpha,
                &beta,
                parsed.map("t")?,
            )?)
        }
        ConstructKind::SdplFromAdmissible => {
            let al = AveragingLieAlgebra::new(
                parsed.algebra("bracket")?,
                parsed.map("p")?.clone(),
            )
            .with_q(parsed.map("q")?.clone());
            split_output(sdpl_from_admissible(&al)?.split())
        }
        ConstructKind::InduceBialgebra => {
            let b = avg_bialgebra_input(&parsed, "bracket")?;
            let bi = induce_sdpl_bialgebra(&b)?;
            let mut out = split_output(bi.sdpl.split());
            out.comults.insert("vartheta".into(), bi.vartheta.clone());
            out.comults.insert("theta".into(), bi.theta.clone());
            out
        }
        ConstructKind::EndoDouble => {
            let mult = args.mult.clone().unwrap_or_else(|| "circ".into());
            let a = parsed.algebra(&mult)?;
            let d = endo_double(&a, &mult)?;
            let mut out = empty_output(d.dim());
            out.mults
                .insert("bracket".into(), d.lie.mult("bracket")?.clone());
            out.maps.insert("p".into(), d.p.clone());
            if let Some(q) = &d.q {
                out.maps.insert("q".into(), q.clone());
            }
            out
        }
        ConstructKind::LeibnizFromAveraging => {
            let al = AveragingLieAlgebra::new(
                parsed.algebra("bracket")?,
                parsed.map("p")?.clone(),
            );
            let leib = induced_leibniz(&al)?;
            let mut out = empty_output(leib.dim);
            out.mults.insert("circ".into(), leib.mult("circ")?.clone());
            out
        }
    };
    write_output(&args.output, &result)?;
    Ok(0)
}

fn run_double(args: &DoubleArgs) -> CliResult<i32> {
    let parsed = load(&args.file)?;
    let result = match args.kind {
        DoubleKind::Leibniz => {
            let sa = parsed.split("succ", "prec")?;
            let sastar = parsed.split("succ_star", "prec_star")?;
            let d = build_leibniz_double(&sa, &sastar)?;
            let mut out = empty_output(d.dim);
            out.mults.insert("circ".into(), d.mult("circ")?.clone());
            out
        }
        DoubleKind::Sdpl => {
            let sa = parsed.split("succ", "prec")?;
            let sastar = parsed.split("succ_star", "prec_star")?;
            split_output(&build_sdpl_double(&sa, &sastar)?)
        }
        DoubleKind::Lie => {
            let lie = parsed.algebra("bracket")?;
            let star = Algebra::new(parsed.dim)
                .with_mult("bracket", parsed.tensor("bracket_star")?.clone());
            let d = lie_double(&lie, &star)?;
            let mut out = empty_output(d.dim);
            out.mults
                .insert("bracket".into(), d.mult("bracket")?.clone());
            out
        }
        DoubleKind::Avg => {
            let b = avg_bialgebra_input(&parsed, "bracket")?;
            let (circ_d, split_d) = avg_manin_to_leibniz_manin(&b)?;
            let mut out = split_output(&split_d);
            out.mults
                .insert("circ".into(), circ_d.mult("circ")?.clone());
            out
        }
    };
    write_output(&args.output, &result)?;
    Ok(0)
}
