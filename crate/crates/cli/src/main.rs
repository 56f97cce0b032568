use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use thompson_core::action::trace;
use thompson_core::coretree::{interval_to_address, StandardInterval, VertexAddress};
use thompson_core::element::{evaluate_word, parse_word, tree_pair_dot, Word};
use thompson_core::harness::{
    all_words, enumerate_representatives, shortlex_filter, tracked_sets, verify_family,
    AlphabetOrder, VerifyOptions,
};
use thompson_core::metric::{
    Ball, FordhamTable, LengthOracle, Limits, DEFAULT_FORDHAM_TABLE, FORDHAM_VALIDATION_RADIUS,
};
use thompson_core::{Error, Result};

/// Exact computations in Thompson's group F.
///
/// Words use `a b A B` for x0, x1 and their inverses, or the long form
/// `x0 x1 x0^-1 x1^-1`; `g^n` repeats a letter.
#[derive(Parser)]
#[command(name = "thompson", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Print plain text (the default).
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced tree pair of a word: canonical key and leaf partitions.
    Eval { word: String },
    /// Geodesic length of the element a word represents.
    Len {
        word: String,
        #[command(flatten)]
        cache: CacheArgs,
        /// Answer from a caret weight table instead of search. `default`
        /// uses the bundled table. The table is checked against ball(8)
        /// first.
        #[arg(long, value_name = "PATH")]
        fordham_table: Option<String>,
    },
    /// Positions, regions, pivot distances and counters along a word (JSON).
    Trace(TraceArgs),
    /// Made-interior and made-exterior events of the tracked vertices (JSON).
    Events(TraceArgs),
    /// Fellow traveler constant of two words.
    Fellow {
        w: String,
        v: String,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Build or load a ball and print its sphere sizes.
    Ball {
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        cache: CacheArgs,
        /// Also stream `length key` for every element.
        #[arg(long)]
        list: bool,
    },
    /// All words of length at most |g| + c representing the element of WORD.
    Enum {
        word: String,
        #[arg(short, default_value_t = 0)]
        c: usize,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// ShortLex-least representative of each element among the given words
    /// (or stdin, one per line).
    Shortlex {
        words: Vec<String>,
        /// Use every word of length at most N instead.
        #[arg(long, value_name = "N")]
        all: Option<usize>,
        /// Alphabet order, as four letters.
        #[arg(long, default_value = "abAB")]
        order: String,
    },
    /// Check the computable claims about the f_k / g_k family.
    FamilyVerify {
        #[arg(short)]
        k: usize,
        /// Skip the breadth-first geodesic length item.
        #[arg(long)]
        no_geodesic: bool,
    },
    /// DOT drawing of the reduced tree pair.
    Show { word: String },
}

#[derive(Args)]
struct CacheArgs {
    /// Ball cache file; loaded if present, written after building.
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    word: String,
    /// Comma separated vertices (`0110`, `root`, or `[a/2^n,b/2^n]`), or
    /// `family` for v_a, v_b with counters over A and B.
    #[arg(long, default_value = "family")]
    track: String,
    /// Family parameter used by `--track family`.
    #[arg(short, default_value_t = 2)]
    k: usize,
}

fn word(s: &str) -> Result<Word> {
    Ok(parse_word(s)?)
}

fn vertex(s: &str) -> Result<VertexAddress> {
    let s = s.trim();
    if s.starts_with('[') {
        Ok(interval_to_address(&s.parse::<StandardInterval>()?))
    } else {
        Ok(s.parse()?)
    }
}

fn tracked(args: &TraceArgs) -> Result<(Vec<VertexAddress>, Vec<VertexAddress>)> {
    if args.track == "family" {
        if args.k < 2 {
            return Err(Error::FamilyIndex {
                k: args.k,
                index: 0,
            });
        }
        let sets = tracked_sets(args.k);
        return Ok((sets.tracked(), sets.counting()));
    }
    let vs: Vec<VertexAddress> = split_vertices(&args.track)
        .iter()
        .map(|s| vertex(s))
        .collect::<Result<_>>()?;
    Ok((vs.clone(), vs))
}

// commas inside `[lo,hi]` do not separate vertices
fn split_vertices(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out.into_iter().filter(|s| !s.trim().is_empty()).collect()
}

fn load_ball(path: &Path) -> Result<Ball> {
    Ball::read_cache(BufReader::new(File::open(path)?))
}

fn save_ball(ball: &Ball, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    ball.write_cache(&mut out)?;
    out.flush()?;
    Ok(())
}

// The oracle, seeded from the cache file when there is one, and the radius
// that file held.
fn oracle(cache: &CacheArgs) -> Result<(LengthOracle, Option<usize>)> {
    let limits = Limits::from_env();
    match &cache.cache {
        Some(p) if p.exists() => {
            let ball = load_ball(p)?;
            let r = ball.radius();
            Ok((LengthOracle::with_ball(ball, limits), Some(r)))
        }
        _ => Ok((LengthOracle::new(limits), None)),
    }
}

// Writes the oracle's ball back when it grew past the cached radius.
fn store(oracle: &LengthOracle, cached: Option<usize>, cache: &CacheArgs) -> Result<()> {
    if let Some(p) = &cache.cache {
        if cached.is_none_or(|r| oracle.ball().radius() > r) {
            save_ball(oracle.ball(), p)?;
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Eval { word: w } => {
            let g = evaluate_word(&word(&w)?);
            let parts = |t: &thompson_core::element::FiniteBinaryTree| {
                t.partition_of_leaves()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
            };
            let (d, r) = (parts(g.domain()), parts(g.range()));
            if json {
                let v = json!({
                    "key": g.canonical_key().to_string(),
                    "hex": g.canonical_key().to_hex(),
                    "domain": d,
                    "range": r,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "key    {}", g.canonical_key())?;
                writeln!(out, "domain {}", d.join(" "))?;
                writeln!(out, "range  {}", r.join(" "))?;
            }
        }
        Command::Len {
            word: w,
            cache,
            fordham_table,
        } => {
            let g = evaluate_word(&word(&w)?);
            let (mut oracle, cached) = oracle(&cache)?;
            let len = match fordham_table {
                Some(path) => {
                    let text = if path == "default" {
                        DEFAULT_FORDHAM_TABLE.to_string()
                    } else {
                        std::fs::read_to_string(&path)?
                    };
                    let table = FordhamTable::parse(&text)?;
                    let ball = oracle.ensure_radius(FORDHAM_VALIDATION_RADIUS)?;
                    let backend = table.validate(ball)?;
                    backend.length(&g)?
                }
                None => oracle.geodesic_length(&g)?,
            };
            store(&oracle, cached, &cache)?;
            if json {
                writeln!(out, "{}", json!({ "word": w, "length": len }))?;
            } else {
                writeln!(out, "{len}")?;
            }
        }
        Command::Trace(args) => {
            let (t, c) = tracked(&args)?;
            let report = trace(&word(&args.word)?, &t, &c);
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report.to_json()).expect("json")
            )?;
        }
        Command::Events(args) => {
            let (t, c) = tracked(&args)?;
            let report = trace(&word(&args.word)?, &t, &c);
            let events = serde_json::to_value(report.events()).expect("json");
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&events).expect("json")
            )?;
        }
        Command::Fellow { w, v, cache } => {
            let (w, v) = (word(&w)?, word(&v)?);
            let (mut oracle, cached) = oracle(&cache)?;
            let profile = oracle.fellow_traveler_profile(&w, &v)?;
            store(&oracle, cached, &cache)?;
            let k = profile.iter().copied().max().unwrap_or(0);
            if json {
                writeln!(out, "{}", json!({ "constant": k, "profile": profile }))?;
            } else {
                writeln!(out, "{k}")?;
            }
        }
        Command::Ball {
            radius,
            cache,
            list,
        } => {
            let limits = Limits::from_env();
            let ball = match &cache.cache {
                Some(p) if p.exists() => {
                    let b = load_ball(p)?;
                    if b.radius() >= radius {
                        b.restricted(radius)
                    } else {
                        let mut o = LengthOracle::with_ball(b, limits);
                        o.ensure_radius(radius)?;
                        save_ball(o.ball(), p)?;
                        o.ball().clone()
                    }
                }
                other => {
                    let b = Ball::build(radius, &limits)?;
                    if let Some(p) = other {
                        save_ball(&b, p)?;
                    }
                    b
                }
            };
            if list {
                for (g, l) in ball.iter() {
                    writeln!(out, "{l} {}", g.canonical_key())?;
                }
            } else if json {
                writeln!(
                    out,
                    "{}",
                    json!({ "radius": radius, "sphere_sizes": ball.sphere_sizes() })
                )?;
            } else {
                for (l, n) in ball.sphere_sizes().iter().enumerate() {
                    writeln!(out, "{l} {n}")?;
                }
            }
        }
        Command::Enum { word: w, c, cache } => {
            let g = evaluate_word(&word(&w)?);
            let (mut oracle, cached) = oracle(&cache)?;
            let words = enumerate_representatives(&g, c, &mut oracle)?;
            store(&oracle, cached, &cache)?;
            for w in words {
                writeln!(out, "{w}")?;
            }
        }
        Command::Shortlex { words, all, order } => {
            let order: AlphabetOrder = order.parse()?;
            let input: Vec<Word> = match all {
                Some(n) => all_words(n, &order),
                None if !words.is_empty() => {
                    words.iter().map(|s| word(s)).collect::<Result<_>>()?
                }
                None => io::stdin()
                    .lock()
                    .lines()
                    .map(|l| word(&l?))
                    .collect::<Result<_>>()?,
            };
            for w in shortlex_filter(&input, &order) {
                writeln!(out, "{w}")?;
            }
        }
        Command::FamilyVerify { k, no_geodesic } => {
            let options = VerifyOptions {
                geodesic: !no_geodesic,
                ..VerifyOptions::default()
            };
            let report = verify_family(k, &options)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("json")
                )?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            return Ok(report.passed());
        }
        Command::Show { word: w } => {
            let g = evaluate_word(&word(&w)?);
            write!(out, "{}", tree_pair_dot(g.tree_pair()))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
