//! The `qm` command line.
//!
//! Exit codes: 0 success, 1 invalid object, 2 usage error, 3 verification
//! failure, 4 network failure.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::{count_class, count_class_sharded, for_each_in_class, ClassObject, ClassSpec, Family};
use crate::oeis::{self, LookupMode, OeisError};
use crate::path::{format_path, parse_path, Colour, ColourMark, Plain};
use crate::phi::{g_unmap, phi};
use crate::psi::{forget_marks, psi};
use crate::render::{render_path, render_walk};
use crate::tableau::{motzkin_to_tableau, tableau_to_motzkin, tableau_to_walk, walk_to_tableau, Tableau3};
use crate::verify::{find_height_counterexample, run_suite, VerificationReport, SUITES};
use crate::walk::parse_walk;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_NETWORK: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "qm", version, about = "Quarter-plane walks and bicoloured Motzkin paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map a walk to its marked bicoloured path
    Map {
        walk: String,
        /// Print the bicoloured path (marks forgotten)
        #[arg(long)]
        forget: bool,
    },
    /// Read a marked path back as a walk, with its validity flag
    Unmap { path: String },
    /// Mark a bicoloured path
    Mark { path: String },
    /// Forget the marks of a marked path
    Forget { path: String },
    /// Stream every member of a class, one per line
    Enum {
        #[command(flatten)]
        class: ClassArgs,
        /// Omit the `#` header
        #[arg(long)]
        no_header: bool,
        /// For walks, append the marked image after a tab
        #[arg(long)]
        with_image: bool,
        /// Draw each object (walks are drawn through their image)
        #[arg(long)]
        render: bool,
    },
    /// Count a class
    Count {
        #[command(flatten)]
        class: ClassArgs,
        /// Shard the count across threads by this many leading steps
        #[arg(long)]
        shard_depth: Option<usize>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        /// Length checked (for `height`, the largest length searched)
        #[arg(long)]
        length: usize,
        /// Strip height for `mp` and `height`
        #[arg(long, default_value_t = 0)]
        height: i64,
        /// Run every length from 0 up to `--length`
        #[arg(long)]
        up_to: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include elapsed time (makes output run-dependent)
        #[arg(long)]
        timing: bool,
    },
    /// Draw an object as ASCII
    Render {
        object: String,
        #[arg(long = "as")]
        family: String,
    },
    /// Tableau conversions
    Tableau(TableauArgs),
    /// Identify an integer sequence
    SeqId {
        /// Comma-separated terms
        terms: String,
        /// Query the OEIS web service instead of the bundled snapshot
        #[arg(long)]
        online: bool,
        #[arg(long, default_value = oeis::DEFAULT_ENDPOINT)]
        endpoint: String,
        /// Snapshot file to use instead of the bundled one
        #[arg(long)]
        snapshot: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    length: usize,
    #[arg(long, conflicts_with = "strip")]
    triangle: Option<i64>,
    #[arg(long)]
    strip: Option<i64>,
    #[arg(long, requires = "strip")]
    no_top_flat: bool,
    #[arg(long)]
    begins_up: bool,
    #[arg(long)]
    no_interior_return: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct TableauArgs {
    #[arg(long)]
    from_walk: Option<String>,
    #[arg(long)]
    to_walk: Option<String>,
    #[arg(long)]
    from_motzkin: Option<String>,
    #[arg(long)]
    to_motzkin: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run one invocation and capture its output. `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli_with(argv, &mut out, &mut err);
    CliOutput {
        code,
        stdout: String::from_utf8_lossy(&out).into_owned(),
        stderr: String::from_utf8_lossy(&err).into_owned(),
    }
}

/// Run one invocation writing to the given streams; returns the exit code.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "{message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_DOMAIN, message: e.to_string() }
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_DOMAIN, message: format!("io: {e}") }
    }
}

type CmdResult = Result<i32, Failure>;

fn family(name: &str) -> Result<Family, Failure> {
    Family::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        Failure::usage(format!("unknown family {name:?}; expected one of {}", names.join(", ")))
    })
}

fn class_spec(a: &ClassArgs) -> Result<ClassSpec, Failure> {
    let spec = ClassSpec {
        family: family(&a.family)?,
        length: a.length,
        triangle_bound: a.triangle,
        strip_height: a.strip,
        forbid_flat_at_top: a.no_top_flat,
        filters: crate::enumerate::Filters {
            begins_with_up: a.begins_up,
            no_interior_return: a.no_interior_return,
        },
    };
    spec.validate().map_err(Failure::usage)?;
    Ok(spec)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Map { walk, forget } => {
            let w = parse_walk(&walk).map_err(Failure::domain)?;
            let m = phi(&w).map_err(Failure::domain)?;
            if forget {
                writeln!(out, "{}", forget_marks(&m))?;
            } else {
                writeln!(out, "{m}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Unmap { path } => {
            let m = parse_path::<ColourMark>(&path).map_err(Failure::domain)?;
            let (steps, valid) = g_unmap(&m).map_err(Failure::domain)?;
            let w: String = steps.iter().map(|s| s.to_char()).collect();
            writeln!(out, "{w}\tvalid={valid}")?;
            Ok(EXIT_OK)
        }
        Command::Mark { path } => {
            let s = parse_path::<Colour>(&path).map_err(Failure::domain)?;
            writeln!(out, "{}", psi(&s).map_err(Failure::domain)?)?;
            Ok(EXIT_OK)
        }
        Command::Forget { path } => {
            let m = parse_path::<ColourMark>(&path).map_err(Failure::domain)?;
            writeln!(out, "{}", forget_marks(&m))?;
            Ok(EXIT_OK)
        }
        Command::Enum { class, no_header, with_image, render } => {
            let spec = class_spec(&class)?;
            if !no_header {
                write!(out, "{}", spec.header())?;
            }
            let mut io_err: Option<io::Error> = None;
            for_each_in_class(&spec, |obj| {
                if io_err.is_none() {
                    if let Err(e) = emit(out, &obj, with_image, render) {
                        io_err = Some(e);
                    }
                }
            })
            .map_err(Failure::usage)?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            Ok(EXIT_OK)
        }
        Command::Count { class, shard_depth } => {
            let spec = class_spec(&class)?;
            let n = match shard_depth {
                Some(k) => count_class_sharded(&spec, k),
                None => count_class(&spec),
            }
            .map_err(Failure::domain)?;
            writeln!(out, "{n}")?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, length, height, up_to, format, timing } => {
            verify(out, &suite, length, height, up_to, format, timing)
        }
        Command::Render { object, family: fam } => {
            let text = match family(&fam)? {
                Family::YWalks | Family::SWalks => {
                    let w = parse_walk(&object).map_err(Failure::domain)?;
                    if fam_is_y(&fam) && !w.is_y_walk() {
                        return Err(Failure::domain(format!("{w} uses steps outside A, L, U")));
                    }
                    render_walk(&w)
                }
                Family::Motzkin => render_path(&parse_path::<Plain>(&object).map_err(Failure::domain)?),
                Family::BicolouredMotzkin => {
                    render_path(&parse_path::<Colour>(&object).map_err(Failure::domain)?)
                }
                Family::MarkedBicolouredMotzkin => {
                    render_path(&parse_path::<ColourMark>(&object).map_err(Failure::domain)?)
                }
            };
            write!(out, "{text}")?;
            Ok(EXIT_OK)
        }
        Command::Tableau(t) => tableau(out, t),
        Command::SeqId { terms, online, endpoint, snapshot } => seq_id(out, &terms, online, &endpoint, snapshot),
    }
}

fn fam_is_y(name: &str) -> bool {
    Family::from_name(name) == Some(Family::YWalks)
}

fn emit(out: &mut dyn Write, obj: &ClassObject, with_image: bool, render: bool) -> io::Result<()> {
    match obj {
        ClassObject::Walk(w) => {
            let image = (with_image || render).then(|| phi(w).expect("enumerated walk"));
            match (&image, with_image) {
                (Some(m), true) => writeln!(out, "{w}\t{}", format_path(m))?,
                _ => writeln!(out, "{w}")?,
            }
            if render {
                write!(out, "{}", render_path(image.as_ref().expect("computed above")))?;
                writeln!(out)?;
            }
        }
        other => {
            writeln!(out, "{other}")?;
            if render {
                let drawing = match other {
                    ClassObject::Plain(p) => render_path(p),
                    ClassObject::Bicoloured(p) => render_path(p),
                    ClassObject::Marked(p) => render_path(p),
                    ClassObject::Walk(_) => unreachable!(),
                };
                write!(out, "{drawing}")?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn verify(
    out: &mut dyn Write,
    suite: &str,
    length: usize,
    height: i64,
    up_to: bool,
    format: Format,
    timing: bool,
) -> CmdResult {
    if !SUITES.contains(&suite) {
        return Err(Failure::usage(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    }
    if height < 0 {
        return Err(Failure::usage("--height must be nonnegative"));
    }
    if suite == "height" {
        let witness = find_height_counterexample(length, height);
        let valid = witness.as_ref().is_some_and(|w| w.validate());
        match (format, &witness) {
            (Format::Json, _) => {
                let json = serde_json::json!({
                    "n_max": length,
                    "H": height,
                    "witness": witness,
                    "validated": valid,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("json"))?;
            }
            (Format::Text, Some(w)) => write!(out, "{}", w.to_text())?,
            (Format::Text, None) => writeln!(out, "witness: none\nn_max: {length}\nH: {height}")?,
        }
        return Ok(if valid { EXIT_OK } else { EXIT_VERIFY });
    }
    let lengths: Vec<usize> = if up_to { (0..=length).collect() } else { vec![length] };
    let reports: Vec<VerificationReport> = lengths
        .iter()
        .map(|&n| {
            let r = run_suite(suite, n, height).expect("suite name checked");
            if timing { r } else { r.without_timing() }
        })
        .collect();
    match format {
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", r.to_text(timing))?;
            }
        }
        Format::Json => {
            let text = if up_to {
                serde_json::to_string_pretty(&reports)
            } else {
                serde_json::to_string_pretty(&reports[0])
            };
            writeln!(out, "{}", text.expect("json"))?;
        }
    }
    Ok(if reports.iter().all(VerificationReport::ok) { EXIT_OK } else { EXIT_VERIFY })
}

fn tableau(out: &mut dyn Write, t: TableauArgs) -> CmdResult {
    if let Some(w) = t.from_walk {
        let w = parse_walk(&w).map_err(Failure::domain)?;
        writeln!(out, "{}", walk_to_tableau(&w).map_err(Failure::domain)?)?;
    } else if let Some(rows) = t.to_walk {
        let tab: Tableau3 = rows.parse().map_err(Failure::domain)?;
        writeln!(out, "{}", tableau_to_walk(&tab))?;
    } else if let Some(m) = t.from_motzkin {
        let m = parse_path::<Plain>(&m).map_err(Failure::domain)?;
        writeln!(out, "{}", motzkin_to_tableau(&m).map_err(Failure::domain)?)?;
    } else if let Some(rows) = t.to_motzkin {
        let tab: Tableau3 = rows.parse().map_err(Failure::domain)?;
        writeln!(out, "{}", tableau_to_motzkin(&tab))?;
    }
    Ok(EXIT_OK)
}

fn parse_terms(text: &str) -> Result<Vec<i128>, Failure> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<i128>().map_err(|_| Failure::usage(format!("bad term {t:?}"))))
        .collect()
}

fn seq_id(
    out: &mut dyn Write,
    terms: &str,
    online: bool,
    endpoint: &str,
    snapshot: Option<std::path::PathBuf>,
) -> CmdResult {
    let terms = parse_terms(terms)?;
    if terms.len() < oeis::MIN_TERMS {
        return Err(Failure::usage(OeisError::TooFewTerms(terms.len())));
    }
    let forced_offline = std::env::var("QM_OFFLINE").is_ok_and(|v| v == "1");
    let mode = if online && !forced_offline { LookupMode::Online } else { LookupMode::Offline };
    let matches = match mode {
        LookupMode::Online => oeis::lookup_online(&terms, endpoint).map_err(|e| match e {
            OeisError::Network(_) => Failure { code: EXIT_NETWORK, message: e.to_string() },
            other => Failure::domain(other),
        })?,
        LookupMode::Offline => {
            let text = match snapshot {
                Some(p) => std::fs::read_to_string(&p)
                    .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?,
                None => oeis::BUNDLED_SNAPSHOT.to_string(),
            };
            let entries = oeis::parse_snapshot(&text).map_err(Failure::domain)?;
            oeis::lookup_offline(&terms, &entries)
        }
    };
    for m in matches {
        writeln!(out, "{}\t{}", m.identifier, m.name)?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CliOutput {
        run_cli(std::iter::once("qm").chain(args.iter().copied()))
    }

    #[test]
    fn map_examples() {
        let o = run(&["map", "UA"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "ur.dr*\n"));
        let o = run(&["map", "UL"]);
        assert_eq!(o.code, EXIT_DOMAIN);
        assert!(o.stderr.contains("LeavesQuadrant(2)"));
        assert_eq!(run(&["map", "--forget", "UA"]).stdout, "urdr\n");
    }

    #[test]
    fn count_example() {
        let o = run(&["count", "--family", "s-walks", "--length", "4"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "144\n"));
        let o = run(&["count", "--family", "s-walks", "--length", "4", "--shard-depth", "2"]);
        assert_eq!(o.stdout, "144\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&[]).code, EXIT_USAGE);
        assert_eq!(run(&["count", "--family", "nope", "--length", "1"]).code, EXIT_USAGE);
        assert_eq!(run(&["count", "--family", "motzkin", "--length", "1", "--triangle", "2"]).code, EXIT_USAGE);
        assert_eq!(run(&["verify", "--suite", "nope", "--length", "1"]).code, EXIT_USAGE);
        assert_eq!(run(&["seq-id", ""]).code, EXIT_USAGE);
        assert_eq!(run(&["seq-id", "1,2,x,4"]).code, EXIT_USAGE);
        assert_eq!(run(&["tableau"]).code, EXIT_USAGE);
        assert_eq!(run(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn unmap_mark_forget() {
        assert_eq!(run(&["unmap", "ur.dr*"]).stdout, "UA\tvalid=true\n");
        assert_eq!(run(&["unmap", "fr."]).stdout, "A\tvalid=false\n");
        assert_eq!(run(&["unmap", "ur*dr*"]).code, EXIT_DOMAIN);
        assert_eq!(run(&["mark", "urdb"]).stdout, "ur.db.\n");
        assert_eq!(run(&["forget", "fr*fb*"]).stdout, "frfb\n");
        assert_eq!(run(&["mark", "ur"]).code, EXIT_DOMAIN);
    }

    #[test]
    fn verify_exit_codes() {
        let o = run(&["verify", "--suite", "bijection", "--length", "3"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("total: 32\n"));
        let o = run(&["verify", "--suite", "height", "--length", "2", "--height", "0"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("walk: RL\n"));
        let o = run(&["verify", "--suite", "height", "--length", "1"]);
        assert_eq!(o.code, EXIT_VERIFY);
    }

    #[test]
    fn tableau_modes() {
        assert_eq!(run(&["tableau", "--from-walk", "UAL"]).stdout, "1/2/3\n");
        assert_eq!(run(&["tableau", "--to-walk", "1,3/2"]).stdout, "UAU\n");
        assert_eq!(run(&["tableau", "--from-motzkin", "ud"]).stdout, "1/2\n");
        assert_eq!(run(&["tableau", "--to-motzkin", "1/2"]).stdout, "ud\n");
        assert_eq!(run(&["tableau", "--from-walk", "UR"]).code, EXIT_DOMAIN);
    }

    #[test]
    fn seq_id_offline() {
        let o = run(&["seq-id", "1,1,2,4,9,21,51"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("A001006\t"));
    }

    #[test]
    fn seq_id_network_failure() {
        if std::env::var("QM_OFFLINE").is_ok_and(|v| v == "1") {
            return;
        }
        let o = run(&["seq-id", "1,1,2,4", "--online", "--endpoint", "http://127.0.0.1:9/search"]);
        assert_eq!(o.code, EXIT_NETWORK, "{o:?}");
    }
}
