//! `numsg` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 a checked
//! theorem conclusion failed (or no irreducible element exists below the
//! provable ceiling).

mod args;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Format, Output, PlotArgs, ScanArgs, Source};
use numsg_core::leamer::{self, ColumnIrreducibles, LeamerElement};
use numsg_core::plot::{self, SvgStyle};
use numsg_core::scan::{self, Family, ScanSpec};
use numsg_core::verifier::verify_semigroup_with;
use numsg_core::witness::{self, WitnessReport};
use numsg_core::{Error, Execution, GenArithParams, NumericalSemigroup};

enum Failure {
    Usage(String),
    Compute(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Compute(e) if e.is_mathematical_event() => 3,
            Failure::Compute(_) | Failure::Io(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Compute(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

type Res<T> = Result<T, Failure>;

const MATH_EVENT: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

struct Loaded {
    sg: NumericalSemigroup,
    params: Option<GenArithParams>,
}

fn load(source: &Source) -> Res<Loaded> {
    let (sg, params) = match (&source.gens, &source.genarith) {
        (Some(gens), None) => (NumericalSemigroup::new(gens)?, None),
        (None, Some(p)) => {
            let &[a, h, d, k] = p.as_slice() else {
                return Err(Failure::Usage("--genarith takes exactly four values a,h,d,k".into()));
            };
            let g = numsg_core::from_gen_arith(GenArithParams::new(a, h, d, k)?)?;
            (g.semigroup, Some(g.params))
        }
        (Some(_), Some(_)) => {
            return Err(Failure::Usage("give either --gens or --genarith, not both".into()))
        }
        (None, None) => return Err(Failure::Usage("one of --gens or --genarith is required".into())),
    };
    let sg = if source.oracle { sg.with_oracle_membership()? } else { sg };
    Ok(Loaded { sg, params })
}

fn pick_format(output: &Output, default: Format, allowed: &[Format]) -> Res<Format> {
    let f = output.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage(format!("format {f:?} is not available for this subcommand")))
    }
}

fn emit(output: &Output, text: &str) -> Res<()> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializes");
    s.push('\n');
    s
}

fn join(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Res<u8> {
    use Format::*;
    match command {
        Command::Info { source, output } => {
            let Loaded { sg, params } = load(&source)?;
            #[derive(Serialize)]
            struct Info<'a> {
                generators: &'a [i64],
                raw_generators: &'a [i64],
                multiplicity: i64,
                embedding_dimension: usize,
                frobenius: i64,
                genus: usize,
                symmetric: bool,
                params: Option<GenArithParams>,
                prop_eligible: Option<bool>,
            }
            let info = Info {
                generators: sg.generators(),
                raw_generators: sg.raw_generators(),
                multiplicity: sg.multiplicity(),
                embedding_dimension: sg.embedding_dimension(),
                frobenius: sg.frobenius(),
                genus: sg.genus(),
                symmetric: sg.is_symmetric(),
                params,
                prop_eligible: params.map(|p| p.is_prop_eligible()),
            };
            let text = match pick_format(&output, Text, &[Text, Json])? {
                Json => json(&info),
                _ => {
                    let mut t = String::new();
                    let _ = writeln!(t, "generators: {}", join(info.generators));
                    let _ = writeln!(t, "raw generators: {}", join(info.raw_generators));
                    let _ = writeln!(t, "multiplicity: {}", info.multiplicity);
                    let _ = writeln!(t, "embedding dimension: {}", info.embedding_dimension);
                    let _ = writeln!(t, "frobenius: {}", info.frobenius);
                    let _ = writeln!(t, "genus: {}", info.genus);
                    let _ = writeln!(t, "symmetric: {}", info.symmetric);
                    if let Some(p) = params {
                        let _ = writeln!(
                            t,
                            "params: a={} h={} d={} k={} (eligible: {})",
                            p.a, p.h, p.d, p.k, p.is_prop_eligible()
                        );
                    }
                    t
                }
            };
            emit(&output, &text)?;
        }

        Command::Apery { source, output } => {
            let Loaded { sg, .. } = load(&source)?;
            let apery = sg.apery_set();
            let text = match pick_format(&output, Text, &[Text, Csv, Json])? {
                Json => json(apery),
                Csv => {
                    let mut t = String::from("r,apery\n");
                    for (r, w) in apery.iter().enumerate() {
                        let _ = writeln!(t, "{r},{w}");
                    }
                    t
                }
                _ => format!("{}\n", join(apery)),
            };
            emit(&output, &text)?;
        }

        Command::Gaps { source, output } => {
            let Loaded { sg, .. } = load(&source)?;
            let text = match pick_format(&output, Text, &[Text, Csv, Json])? {
                Json => json(sg.gaps()),
                Csv => {
                    let mut t = String::from("gap\n");
                    for g in sg.gaps() {
                        let _ = writeln!(t, "{g}");
                    }
                    t
                }
                _ => format!("{}\n", join(sg.gaps())),
            };
            emit(&output, &text)?;
        }

        Command::Symmetric { source, output } => {
            let Loaded { sg, .. } = load(&source)?;
            let text = match pick_format(&output, Text, &[Text, Json])? {
                Json => json(&sg.is_symmetric()),
                _ => format!("{}\n", sg.is_symmetric()),
            };
            emit(&output, &text)?;
        }

        Command::Leamer { source, s, n, ell, output } => {
            let Loaded { sg, .. } = load(&source)?;
            let e = LeamerElement::new(n, ell)?;
            let member = leamer::in_leamer(&sg, s, e)?;
            let irreducible = if member { Some(leamer::is_irreducible(&sg, s, e)?) } else { None };
            #[derive(Serialize)]
            struct Query {
                s: i64,
                n: i64,
                ell: i64,
                member: bool,
                irreducible: Option<bool>,
            }
            let q = Query { s, n, ell, member, irreducible };
            let text = match pick_format(&output, Text, &[Text, Json])? {
                Json => json(&q),
                _ => match irreducible {
                    Some(irr) => format!("{e} member: true\nirreducible: {irr}\n"),
                    None => format!("{e} member: false\n"),
                },
            };
            emit(&output, &text)?;
        }

        Command::Irreducibles { source, s, nmax, output } => {
            let Loaded { sg, .. } = load(&source)?;
            let columns: Vec<ColumnIrreducibles> = match s {
                Some(s) => vec![leamer::column_irreducibles(&sg, s, nmax)?],
                None => leamer::all_columns(&sg, nmax, Execution::default()),
            };
            let text = match pick_format(&output, Text, &[Text, Csv, Json])? {
                Json => json(&columns),
                Csv => {
                    let mut t = String::from("s,n\n");
                    for c in &columns {
                        for n in &c.points {
                            let _ = writeln!(t, "{},{n}", c.s);
                        }
                    }
                    t
                }
                _ => columns
                    .iter()
                    .map(|c| format!("s={}: {}\n", c.s, join(&c.points)))
                    .collect(),
            };
            emit(&output, &text)?;
        }

        Command::Witness { source, s, output } => {
            let Loaded { sg, params } = load(&source)?;
            let steps: Vec<i64> = match s {
                Some(s) => vec![s],
                None => sg.gaps().to_vec(),
            };
            let reports = steps
                .iter()
                .map(|&s| witness::hw_witness(&sg, s, params.as_ref()))
                .collect::<Result<Vec<WitnessReport>, _>>()?;
            let text = match pick_format(&output, Text, &[Text, Csv, Json])? {
                Json if s.is_some() => json(&reports[0]),
                Json => json(&reports),
                Csv => {
                    let mut t = String::from("s,rule,n,ell,g,verified\n");
                    for r in &reports {
                        let g = r.g_value.map(|g| g.to_string()).unwrap_or_default();
                        let _ = writeln!(
                            t,
                            "{},{},{},{},{g},{}",
                            r.s, r.rule, r.element.n, r.element.ell, r.verified
                        );
                    }
                    t
                }
                _ => reports
                    .iter()
                    .map(|r| {
                        let g = r.g_value.map(|g| format!(" g={g}")).unwrap_or_default();
                        format!(
                            "s={} rule={} element={}{g} verified={}\n",
                            r.s, r.rule, r.element, r.verified
                        )
                    })
                    .collect(),
            };
            emit(&output, &text)?;
        }

        Command::Verify { source, output } => {
            let Loaded { sg, params } = load(&source)?;
            let report = verify_semigroup_with(&sg, params.as_ref(), Execution::default());
            let text = match pick_format(&output, Json, &[Text, Json])? {
                Text => {
                    let mut t = String::new();
                    let _ = writeln!(t, "generators: {}", join(&report.generators));
                    let _ = writeln!(t, "frobenius: {}", report.frobenius);
                    let _ = writeln!(t, "symmetric: {}", report.symmetric);
                    let _ = writeln!(t, "gap columns: {}", report.gap_count());
                    for c in &report.columns {
                        let w = report
                            .witness_for(c.s)
                            .map(|w| format!("{} {} verified={}", w.rule, w.element, w.verified))
                            .unwrap_or_else(|| "-".into());
                        let _ = writeln!(t, "  s={:<4} irreducibles={:<3} witness: {w}", c.s, c.points.len());
                    }
                    match report.failures() {
                        [] => t.push_str("status: AllColumnsCovered\n"),
                        fs => {
                            t.push_str("status: Failure\n");
                            for f in fs {
                                let _ = writeln!(t, "  {:?} {}", f.kind, f.message);
                            }
                        }
                    }
                    t
                }
                _ => format!("{}\n", report.to_json_line()),
            };
            emit(&output, &text)?;
            if report.failures().iter().any(|f| f.is_mathematical_event()) {
                return Ok(MATH_EVENT);
            }
        }

        Command::Scan(args) => return run_scan(args),
        Command::Plot(args) => run_plot(args)?,
    }
    Ok(0)
}

fn scan_spec(args: &ScanArgs) -> Res<ScanSpec> {
    let mut spec = match &args.config {
        Some(path) => ScanSpec::parse_config(&fs::read_to_string(path)?)?,
        None => {
            let need = |v: &Option<String>, name: &str| {
                v.as_deref()
                    .ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
                    .and_then(|s| scan::parse_range(s).map_err(Failure::from))
            };
            let family = match args.family.as_deref() {
                Some("genarith") => Family::GenArith {
                    a: need(&args.a, "a")?,
                    h: need(&args.h, "h")?,
                    d: need(&args.d, "d")?,
                    k: need(&args.k, "k")?,
                },
                Some("list") => {
                    let list = args
                        .list
                        .as_deref()
                        .ok_or_else(|| Failure::Usage("--list is required for the list family".into()))?;
                    Family::ExplicitList(scan::parse_generator_lists(list)?)
                }
                Some("symmetric") => Family::SymmetricUpToFrobenius(args.fmax.ok_or_else(|| {
                    Failure::Usage("--fmax is required for the symmetric family".into())
                })?),
                Some(other) => return Err(Failure::Usage(format!("unknown family {other:?}"))),
                None => return Err(Failure::Usage("--family or --config is required".into())),
            };
            ScanSpec::new(family)
        }
    };
    if args.all {
        spec.symmetric_only = false;
    }
    spec.eligible_only |= args.eligible_only;
    spec.validate()?;
    Ok(spec)
}

fn run_scan(args: ScanArgs) -> Res<u8> {
    let spec = scan_spec(&args)?;
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let out = with_workers(args.workers, || scan::scan_with(&spec, exec))??;
    let text = match pick_format(&args.output, Format::Json, &[Format::Text, Format::Json])? {
        Format::Text => {
            let s = &out.summary;
            format!(
                "candidates: {}\nfiltered: {}\ninvalid: {}\nreports: {}\ncovered: {}\nfailed: {}\ntheorem violations: {}\ngap columns: {}\n",
                s.candidates, s.filtered, s.invalid, s.reports, s.covered, s.failed, s.theorem_violations, s.gap_columns
            )
        }
        _ => out.to_json_lines(),
    };
    emit(&args.output, &text)?;
    Ok(if out.summary.theorem_violations > 0 { MATH_EVENT } else { 0 })
}

#[cfg(feature = "parallel")]
fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Res<T> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Failure::Usage("--workers must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure::Io(io::Error::other(e)))?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn with_workers<T: Send>(_workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Res<T> {
    Ok(f())
}

fn run_plot(args: PlotArgs) -> Res<()> {
    let Loaded { sg, params } = load(&args.source)?;
    let ps = plot::build_pointset(&sg, params.as_ref(), args.nmax);
    let text = match pick_format(&args.output, Format::Svg, &[Format::Svg, Format::Csv, Format::Json])? {
        Format::Csv => plot::emit_csv(&ps),
        Format::Json => plot::emit_json(&ps),
        _ => {
            let mut style = SvgStyle::default();
            if let Some(w) = args.width {
                style.width = w;
            }
            if let Some(h) = args.height {
                style.height = h;
            }
            if let Some(r) = args.marker_radius {
                style.marker_radius = r;
            }
            if let Some(c) = args.point_color {
                style.point_color = c;
            }
            if let Some(c) = args.overlay_color {
                style.overlay_color = c;
            }
            if !(style.width > 2.0 * style.margin && style.height > 2.0 * style.margin) {
                return Err(Failure::Usage(format!(
                    "width and height must exceed twice the margin ({})",
                    style.margin
                )));
            }
            plot::emit_svg(&ps, &style)
        }
    };
    emit(&args.output, &text)
}
