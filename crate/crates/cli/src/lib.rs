use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tsscpp::bijections::{convert, Kind};
use tsscpp::claims::{Claim, ClaimReport};
use tsscpp::enumerate::{self, FamilyId};
use tsscpp::orders::{short_label, OrderName};
use tsscpp::statistics::{distribution, Statistic};
use tsscpp::triangles::Object;
use tsscpp::Permutation;

const USAGE: i32 = 2;
const FAILED: i32 = 1;

#[derive(Parser)]
#[command(name = "tsscpp", version, about = "Alternating sign matrices, TSSCPP and their posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family, in canonical order.
    Enumerate {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
        /// One JSON object per line instead of a JSON array.
        #[arg(long)]
        jsonl: bool,
    },
    /// Convert an object between encodings.
    Convert {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        /// JSON object, one-line permutation, or `-` for standard input.
        input: String,
    },
    /// Every statistic defined on an object.
    Stats {
        #[arg(long)]
        from: Kind,
        input: String,
    },
    /// Distribution of a statistic over a family.
    Dist {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        stat: Statistic,
    },
    /// Build a named poset and export its Hasse diagram.
    Poset {
        #[arg(long)]
        name: OrderName,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        out: PosetFormat,
        /// Keep full JSON labels in DOT output.
        #[arg(long)]
        long_labels: bool,
    },
    /// Check one structural statement at one order.
    PosetCheck {
        #[arg(long, value_parser = parse_claim)]
        claim: Claim,
        #[arg(long)]
        n: usize,
    },
    /// Run every check for all orders from 2 up to `n`.
    VerifyAll {
        #[arg(long)]
        n: usize,
    },
}

/// Claim names accepted on the command line besides the descriptive ones.
const CLAIM_TOKENS: [(&str, Claim); 10] = [
    ("thm4.2", Claim::AsmIdeals),
    ("thm4.4", Claim::AsmPermutationsBruhat),
    ("thm4.6", Claim::TsscppIdeals),
    ("thm4.9", Claim::MagogTamari),
    ("thm4.12", Claim::MagogCatalan),
    ("cor4.16", Claim::BooleanSandwich),
    ("cor4.17", Claim::BooleanCatalan),
    ("lemma4.8", Claim::CoverMoves),
    ("prop-nonlattice", Claim::NonLattice),
    ("remark-avoiders", Claim::UnrankedAvoiders),
];

fn parse_claim(s: &str) -> Result<Claim, String> {
    CLAIM_TOKENS
        .iter()
        .find(|(t, _)| *t == s)
        .map(|&(_, c)| c)
        .map_or_else(|| s.parse().map_err(|e: tsscpp::Error| e.to_string()), Ok)
}

fn token(claim: Claim) -> &'static str {
    CLAIM_TOKENS.iter().find(|(_, c)| *c == claim).map_or(claim.name(), |(t, _)| t)
}

/// Largest order at which `verify-all` runs each claim.
fn claim_range(claim: Claim, n: usize) -> std::ops::RangeInclusive<usize> {
    match claim {
        Claim::UnrankedAvoiders => 4..=n.min(4),
        Claim::AsmIdeals | Claim::TsscppIdeals => 2..=n.min(5),
        _ => 2..=n.min(6),
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<tsscpp::Error> for Failure {
    fn from(e: tsscpp::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (program name first), writes data to `out` and diagnostics
/// to `err`, and returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "{msg}");
            FAILED
        }
    }
}

fn read_object(kind: Kind, input: &str) -> Result<Object, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        input.to_string()
    };
    let text = text.trim();
    if kind == Kind::Permutation && !text.starts_with('{') {
        return Ok(Object::from(text.parse::<Permutation>()?));
    }
    let mut value: Value = serde_json::from_str(text).map_err(|e| Failure::Usage(format!("input is not JSON: {e}")))?;
    let tag = serde_json::to_value(kind).expect("kind tag");
    match value.as_object_mut() {
        Some(map) => match map.get("kind") {
            None => {
                map.insert("kind".into(), tag);
            }
            Some(given) if *given != tag => {
                return Err(Failure::Usage(format!("input has kind {given}, expected {tag}")));
            }
            Some(_) => {}
        },
        None => return Err(Failure::Usage("input must be a JSON object".into())),
    }
    Ok(Object::from_json(&value.to_string())?)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate { family, n, count_only, jsonl } => {
            if count_only {
                writeln!(out, "{}", enumerate::count(family, n)?)?;
            } else if jsonl {
                for obj in enumerate::generate(family, n)? {
                    writeln!(out, "{}", obj.to_json())?;
                }
            } else {
                let all: Vec<String> = enumerate::generate(family, n)?.map(|o| o.to_json()).collect();
                writeln!(out, "[{}]", all.join(","))?;
            }
        }
        Command::Convert { from, to, input } => {
            let obj = read_object(from, &input)?;
            writeln!(out, "{}", convert(&obj, to)?.to_json())?;
        }
        Command::Stats { from, input } => {
            let obj = read_object(from, &input)?;
            let mut stats = serde_json::Map::new();
            for s in Statistic::ALL {
                if let Ok(v) = s.evaluate(&obj) {
                    stats.insert(s.name().into(), json!(v));
                }
            }
            writeln!(out, "{}", Value::Object(stats))?;
        }
        Command::Dist { family, n, stat } => {
            let d = distribution(family, n, stat)?;
            let map: serde_json::Map<String, Value> = d.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            writeln!(out, "{}", Value::Object(map))?;
        }
        Command::Poset { name, n, out: format, long_labels } => {
            let p = name.build(n)?;
            match format {
                PosetFormat::Json => writeln!(out, "{}", p.to_json())?,
                PosetFormat::Dot if long_labels => write!(out, "{}", p.to_dot(&format!("{}_{n}", name.name())))?,
                PosetFormat::Dot => write!(out, "{}", p.to_dot_with(&format!("{}_{n}", name.name()), short_label))?,
            }
        }
        Command::PosetCheck { claim, n } => {
            let report = claim.check(n)?;
            let text = report_json(&report);
            writeln!(out, "{text}")?;
            if !report.holds {
                return Err(Failure::Check(format!("{} does not hold at n={n}", token(claim))));
            }
        }
        Command::VerifyAll { n } => verify_all(n, out)?,
    }
    Ok(())
}

fn report_json(r: &ClaimReport) -> Value {
    json!({ "claim": token(r.claim), "n": r.n, "holds": r.holds, "witness": r.witness })
}

fn verify_all(n: usize, out: &mut dyn Write) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage("verify-all needs n >= 2".into()));
    }
    let mut failures = Vec::new();
    for m in 1..=n.min(FamilyId::Asm.cap()) {
        let asms = enumerate::count(FamilyId::Asm, m)?;
        let booleans = enumerate::count(FamilyId::BooleanTriangle, m)?;
        let ok = asms == booleans;
        writeln!(out, "{}  counts  n={m}  asm={asms} boolean={booleans}", if ok { "PASS" } else { "FAIL" })?;
        if !ok {
            failures.push(format!("counts n={m}"));
        }
    }
    for claim in Claim::ALL {
        for m in claim_range(claim, n) {
            let r = claim.check(m)?;
            let tag = if r.holds { "PASS" } else { "FAIL" };
            writeln!(out, "{tag}  {}  n={m}", token(claim))?;
            if !r.holds {
                failures.push(report_json(&r).to_string());
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failures.join("\n")))
    }
}
