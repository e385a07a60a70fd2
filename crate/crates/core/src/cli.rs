//! Command-line frontend.
//!
//! [`run`] parses arguments, dispatches a subcommand and writes its output
//! as text, JSON or CSV. Exit codes: 0 success, 1 usage error, 2 rejected
//! input, 3 internal invariant failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::billey::{
    billey_eval_bruteforce, billey_eval_dp, billey_eval_subsets, inversion_heights, sound_window,
    subset_scan_cost,
};
use crate::error::Error;
use crate::peterson::{
    coxeter_word, giambelli_ratio_at, monk_eval_at, monk_structure_constants_with,
    structure_constant_residuals, FixedPoints,
};
use crate::report::{build_report, resolve_longest, BigNum, Fraction, ReportOptions};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::verify::{self, Level};
use crate::weyl::{reduced_words, SimpleSubset, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Subset scans above this many candidates print a cost warning.
const SUBSET_SCAN_WARN: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "peterson",
    version,
    about = "Root systems, reduced words and Peterson-projected localization"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Alternative reduced word (comma list) for the longest element.
    #[arg(long, global = true, value_name = "LETTERS")]
    seed_word: Option<Word>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Backtrack,
    Subsets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Positive roots with their heights.
    Roots {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
    },
    /// Cover relations of the root poset.
    Poset {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
    },
    /// Reduced word of the longest element of a parabolic subgroup.
    Longest {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
        /// 1-based comma list; defaults to all generators.
        #[arg(long)]
        subset: Option<IndexList>,
    },
    /// The longest word and its inversion heights.
    Lists {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
        #[arg(long)]
        subset: Option<IndexList>,
    },
    /// Monk evaluations p_{s_i}(w_J).
    Monk {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
        #[arg(short = 'i', value_name = "GENERATOR")]
        generator: Option<usize>,
        #[arg(long)]
        subset: Option<IndexList>,
    },
    /// Giambelli evaluation p_{v_K}(w_K), optionally checked by an oracle.
    Giambelli {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
        #[arg(long)]
        subset: Option<IndexList>,
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
        /// Restrict the oracle to the first N positions of w_K.
        #[arg(long, value_name = "N")]
        window: Option<usize>,
    },
    /// Monk structure constants of p_{s_i}·p_{v_K}.
    Constants {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
        #[arg(short = 'i', value_name = "GENERATOR")]
        generator: usize,
        #[arg(long)]
        subset: IndexList,
    },
    /// Full pipeline for one type.
    Report {
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: LieType,
        /// Leave out stage timings, making the output reproducible.
        #[arg(long)]
        no_timings: bool,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
    },
}

/// A 1-based comma list such as `1,2,5`; the empty string is the empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IndexList(Vec<usize>);

impl std::str::FromStr for IndexList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.parse::<Word>().map(|w| IndexList(w.letters().to_vec()))
    }
}

/// One command's output in all three formats.
struct Rendered {
    json: Value,
    text: String,
    csv: Vec<(String, String, String)>,
    status: i32,
}

impl Rendered {
    fn new(json: Value, text: String, csv: Vec<(String, String, String)>) -> Self {
        Rendered {
            json,
            text,
            csv,
            status: EXIT_OK,
        }
    }
}

fn row(q: &str, index: impl ToString, value: impl ToString) -> (String, String, String) {
    (q.to_string(), index.to_string(), value.to_string())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Canonical JSON: keys sorted, two-space indentation, trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("output is serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("value is serializable");
    s.push('\n');
    s
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let format = cli.format;
    match dispatch(cli, err) {
        Ok(rendered) => {
            let written = match format {
                Format::Text => out.write_all(rendered.text.as_bytes()),
                Format::Json => out.write_all(to_canonical_json(&rendered.json).as_bytes()),
                Format::Csv => write_csv(out, &rendered.csv),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INTERNAL;
            }
            rendered.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_REJECTED
            }
        }
    }
}

fn write_csv(out: &mut dyn Write, rows: &[(String, String, String)]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["quantity", "index", "value"])?;
    for (q, i, v) in rows {
        w.write_record([q, i, v])?;
    }
    w.flush()
}

fn subset_or_full(rs: &RootSystem, subset: &Option<IndexList>) -> Result<SimpleSubset, Error> {
    match subset {
        Some(IndexList(idx)) => SimpleSubset::from_indices(rs, idx),
        None => Ok(SimpleSubset::full(rs.rank())),
    }
}

fn dispatch(cli: Cli, err: &mut dyn Write) -> Result<Rendered, Error> {
    let seed = cli.seed_word.as_ref();
    match cli.command {
        Command::Roots { lie_type } => Ok(roots(&RootSystem::new(lie_type))),
        Command::Poset { lie_type } => Ok(poset(&RootSystem::new(lie_type))),
        Command::Longest { lie_type, subset } => {
            let rs = RootSystem::new(lie_type);
            let j = subset_or_full(&rs, &subset)?;
            longest(&rs, j, seed)
        }
        Command::Lists { lie_type, subset } => {
            let rs = RootSystem::new(lie_type);
            let j = subset_or_full(&rs, &subset)?;
            lists(&rs, j, seed)
        }
        Command::Monk {
            lie_type,
            generator,
            subset,
        } => {
            let rs = RootSystem::new(lie_type);
            let j = subset_or_full(&rs, &subset)?;
            monk(&rs, generator, j, seed)
        }
        Command::Giambelli {
            lie_type,
            subset,
            oracle,
            window,
        } => {
            let rs = RootSystem::new(lie_type);
            let k = subset_or_full(&rs, &subset)?;
            let oracle = oracle.or(window.map(|_| Oracle::Backtrack));
            giambelli(&rs, k, seed, oracle, window, err)
        }
        Command::Constants {
            lie_type,
            generator,
            subset,
        } => {
            let rs = RootSystem::new(lie_type);
            let k = SimpleSubset::from_indices(&rs, &subset.0)?;
            constants(&rs, generator, k)
        }
        Command::Report {
            lie_type,
            no_timings,
        } => {
            let rs = RootSystem::new(lie_type);
            report(&rs, seed, !no_timings)
        }
        Command::Verify { level } => Ok(run_verify(match level {
            VerifyLevel::Quick => Level::Quick,
            VerifyLevel::Full => Level::Full,
        })),
    }
}

fn roots(rs: &RootSystem) -> Rendered {
    let label = rs.label().to_string();
    let mut text = format!("{label}: {} positive roots\n", rs.positives().len());
    let mut entries = Vec::new();
    let mut csv = Vec::new();
    for (k, r) in rs.positives().iter().enumerate() {
        let h = r.height().expect("generated roots are positive");
        text.push_str(&format!("{:>4}  {r}  height {h}\n", k + 1));
        entries.push(json!({ "index": k + 1, "coeffs": r.coeffs(), "height": h }));
        csv.push(row("root", k + 1, join(r.coeffs())));
        csv.push(row("height", k + 1, h));
    }
    Rendered::new(
        json!({ "type": label, "count": rs.positives().len(), "roots": entries }),
        text,
        csv,
    )
}

fn poset(rs: &RootSystem) -> Rendered {
    let label = rs.label().to_string();
    let covers = rs.root_poset_covers();
    let mut text = format!("{label}: {} cover relations\n", covers.len());
    let mut entries = Vec::new();
    let mut csv = Vec::new();
    for (k, (lo, up)) in covers.iter().enumerate() {
        let i = lo
            .coeffs()
            .iter()
            .zip(up.coeffs())
            .position(|(a, b)| a != b)
            .map_or(0, |p| p + 1);
        text.push_str(&format!("{lo} < {up}  (+α{i})\n"));
        entries.push(json!({ "lower": lo.coeffs(), "upper": up.coeffs(), "simple": i }));
        csv.push(row("cover", k + 1, format!("{};{}", join(lo.coeffs()), join(up.coeffs()))));
    }
    Rendered::new(json!({ "type": label, "covers": entries }), text, csv)
}

fn longest(rs: &RootSystem, j: SimpleSubset, seed: Option<&Word>) -> Result<Rendered, Error> {
    let w = resolve_longest(rs, j, seed)?;
    let text = format!("{} w_J for J = {j}: {w}  length {}\n", rs.label(), w.len());
    let csv = w
        .letters()
        .iter()
        .enumerate()
        .map(|(p, l)| row("letter", p + 1, l))
        .collect();
    Ok(Rendered::new(
        json!({
            "type": rs.label().to_string(),
            "subset": j.indices(),
            "word": w.letters(),
            "length": w.len(),
        }),
        text,
        csv,
    ))
}

fn lists(rs: &RootSystem, j: SimpleSubset, seed: Option<&Word>) -> Result<Rendered, Error> {
    let w = resolve_longest(rs, j, seed)?;
    let heights = inversion_heights(rs, &w)?;
    let text = format!(
        "{} J = {j}\nlongest word:      [{}]\ninversion heights: [{}]\n",
        rs.label(),
        w.letters().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        heights.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    );
    let mut csv = Vec::new();
    for (p, (l, h)) in w.letters().iter().zip(&heights).enumerate() {
        csv.push(row("letter", p + 1, l));
        csv.push(row("height", p + 1, h));
    }
    Ok(Rendered::new(
        json!({
            "type": rs.label().to_string(),
            "subset": j.indices(),
            "longest_word": w.letters(),
            "inversion_heights": heights,
        }),
        text,
        csv,
    ))
}

fn monk(
    rs: &RootSystem,
    generator: Option<usize>,
    j: SimpleSubset,
    seed: Option<&Word>,
) -> Result<Rendered, Error> {
    let w = resolve_longest(rs, j, seed)?;
    let generators = match generator {
        Some(i) => {
            rs.check_generator(i)?;
            vec![i]
        }
        None => (1..=rs.rank()).collect(),
    };
    let mut text = format!("{} J = {j}\n", rs.label());
    let mut values = serde_json::Map::new();
    let mut csv = Vec::new();
    let mut total = BigUint::default();
    for i in generators {
        let m = monk_eval_at(rs, i, &w)?;
        text.push_str(&format!("p_s{i}(w_J) = {m}\n"));
        csv.push(row("monk", i, &m.coeff));
        values.insert(i.to_string(), serde_json::to_value(BigNum::from(m.coeff.clone())).unwrap());
        total += m.coeff;
    }
    text.push_str(&format!("total = {total}·t\n"));
    Ok(Rendered::new(
        json!({
            "type": rs.label().to_string(),
            "subset": j.indices(),
            "monk": values,
            "total": BigNum::from(total),
            "degree": 1,
        }),
        text,
        csv,
    ))
}

fn giambelli(
    rs: &RootSystem,
    k: SimpleSubset,
    seed: Option<&Word>,
    oracle: Option<Oracle>,
    window: Option<usize>,
    err: &mut dyn Write,
) -> Result<Rendered, Error> {
    let v = coxeter_word(k)?;
    let w = resolve_longest(rs, k, seed)?;
    let patterns = reduced_words(rs, &v)?;
    let value = billey_eval_dp(rs, &v, &w)?;
    let ratio = giambelli_ratio_at(rs, k, &w)?;
    let sound = sound_window(rs, &v, &w)?;
    let mut text = format!(
        "{} K = {k}\nv_K = {v}  ({} reduced words)\np_v_K(w_K) = {value}  [dp]\nratio Π p_s_i(w_K) / p_v_K(w_K) = {ratio}\n",
        rs.label(),
        patterns.len(),
    );
    let mut csv = vec![
        row("giambelli_dp", 1, &value.coeff),
        row("ratio", 1, &ratio),
        row("reduced_word_count_vk", 1, patterns.len()),
    ];
    let mut doc = json!({
        "type": rs.label().to_string(),
        "subset": k.indices(),
        "v_k": v.letters(),
        "reduced_words": patterns.iter().map(|u| u.letters().to_vec()).collect::<Vec<_>>(),
        "value": BigNum::from(value.coeff.clone()),
        "degree": value.degree,
        "ratio": Fraction::from_rational(&ratio),
        "sound_window": sound,
    });
    let mut status = EXIT_OK;
    if let Some(oracle) = oracle {
        let checked = match oracle {
            Oracle::Backtrack => billey_eval_bruteforce(rs, &v, &w, window)?,
            Oracle::Subsets => {
                let cost = subset_scan_cost(&v, window.unwrap_or(w.len()));
                let heavy = matches!(
                    (rs.label().family(), rs.rank()),
                    (Family::E, 7) | (Family::E, 8)
                );
                if heavy || cost > BigUint::from(SUBSET_SCAN_WARN) {
                    let _ = writeln!(
                        err,
                        "warning: the subset scan inspects {cost} candidate position sets; \
                         this may take a very long time"
                    );
                }
                billey_eval_subsets(rs, &v, &w, window)?
            }
        };
        let method = match oracle {
            Oracle::Backtrack => "backtrack",
            Oracle::Subsets => "subsets",
        };
        let agrees = checked == value;
        text.push_str(&format!(
            "p_v_K(w_K) = {checked}  [{method}, window {}]\n{}\n",
            window.unwrap_or(w.len()),
            if agrees { "oracle agrees" } else { "ORACLE DISAGREES" }
        ));
        csv.push(row(&format!("giambelli_{method}"), 1, &checked.coeff));
        doc["oracle"] = json!({
            "method": method,
            "window": window.unwrap_or(w.len()),
            "value": BigNum::from(checked.coeff),
            "agrees": agrees,
        });
        if !agrees {
            let _ = writeln!(err, "error: DP and {method} oracle disagree");
            status = EXIT_INTERNAL;
        }
    }
    let mut rendered = Rendered::new(doc, text, csv);
    rendered.status = status;
    Ok(rendered)
}

fn constants(rs: &RootSystem, i: usize, k: SimpleSubset) -> Result<Rendered, Error> {
    let points = FixedPoints::new(rs)?;
    let c = monk_structure_constants_with(&points, i, k)?;
    let residual_zero = structure_constant_residuals(&points, i, k, &c)
        .iter()
        .all(|(_, r)| num_traits::Zero::is_zero(r));
    if !residual_zero {
        return Err(Error::Invariant(
            "structure constants leave a nonzero residual".into(),
        ));
    }
    let lhs = if k.is_empty() {
        format!("p_s{i}")
    } else {
        format!("p_s{i} · p_v{k}")
    };
    let rhs: Vec<String> = c
        .iter()
        .map(|(kp, term)| {
            let t = match term.t_exponent {
                0 => String::new(),
                1 => "t·".to_string(),
                e => format!("t^{e}·"),
            };
            format!("{}·{t}p_v{kp}", term.coeff)
        })
        .collect();
    let text = format!(
        "{}: {lhs} = {}\nresidual at all {} fixed points: 0\n",
        rs.label(),
        if rhs.is_empty() { "0".to_string() } else { rhs.join(" + ") },
        1u64 << rs.rank(),
    );
    let terms: Vec<Value> = c
        .iter()
        .map(|(kp, term)| {
            json!({
                "class": kp.indices(),
                "coeff": Fraction::from_rational(&term.coeff),
                "t_exponent": term.t_exponent,
            })
        })
        .collect();
    let csv = c
        .iter()
        .map(|(kp, term)| row("constant", join(&kp.indices()), &term.coeff))
        .collect();
    Ok(Rendered::new(
        json!({
            "type": rs.label().to_string(),
            "i": i,
            "subset": k.indices(),
            "terms": terms,
            "residual_zero": residual_zero,
        }),
        text,
        csv,
    ))
}

fn report(rs: &RootSystem, seed: Option<&Word>, timings: bool) -> Result<Rendered, Error> {
    let record = build_report(
        rs,
        &ReportOptions {
            seed_word: seed.cloned(),
            timings,
        },
    )?;
    let mut text = format!(
        "{} report\nlongest word ({} letters): {}\ninversion heights: {}\n",
        record.type_label,
        record.longest_word.len(),
        join(&record.longest_word),
        join(&record.inversion_heights),
    );
    for (i, m) in &record.monk {
        text.push_str(&format!("p_s{i}(w_K) = {m}·t\n"));
    }
    text.push_str(&format!(
        "sum of Monk values = {}\n|R(v_K)| = {}\np_v_K(w_K) = {}·t^{}  [dp]\np_v_K(w_K) = {}·t^{}  [backtrack, window {}]\nratio = {}/{}\n",
        record.monk_total,
        record.reduced_word_count_vk,
        record.giambelli,
        rs.rank(),
        record.oracle.value,
        rs.rank(),
        record.oracle.window,
        record.ratio.numerator,
        record.ratio.denominator,
    ));
    let mut csv = Vec::new();
    for (p, (l, h)) in record
        .longest_word
        .iter()
        .zip(&record.inversion_heights)
        .enumerate()
    {
        csv.push(row("letter", p + 1, l));
        csv.push(row("height", p + 1, h));
    }
    for (i, m) in &record.monk {
        csv.push(row("monk", i, m));
    }
    csv.push(row("giambelli", 1, &record.giambelli));
    csv.push(row("giambelli_backtrack", 1, &record.oracle.value));
    csv.push(row(
        "ratio",
        1,
        format!("{}/{}", record.ratio.numerator, record.ratio.denominator),
    ));
    csv.push(row("reduced_word_count_vk", 1, record.reduced_word_count_vk));
    if let Some(t) = &record.timings_us {
        for (stage, us) in t {
            text.push_str(&format!("time {stage}: {us} µs\n"));
            csv.push(row("time_us", stage, us));
        }
    }
    let json = serde_json::to_value(&record).expect("report is serializable");
    Ok(Rendered::new(json, text, csv))
}

fn run_verify(level: Level) -> Rendered {
    let outcomes = verify::run(level);
    let passed = outcomes.iter().all(|o| o.passed);
    let mut text = String::new();
    let mut checks = Vec::new();
    let mut csv = Vec::new();
    for o in &outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{tag} {}: {}\n", o.name, o.detail));
        checks.push(json!({ "name": o.name, "passed": o.passed, "detail": o.detail }));
        csv.push(row("check", &o.name, tag));
    }
    let failures = outcomes.iter().filter(|o| !o.passed).count();
    text.push_str(&format!("{} checks, {failures} failed\n", outcomes.len()));
    let mut rendered = Rendered::new(
        json!({
            "level": if level == Level::Quick { "quick" } else { "full" },
            "passed": passed,
            "checks": checks,
        }),
        text,
        csv,
    );
    if !passed {
        rendered.status = EXIT_INTERNAL;
    }
    rendered
}
