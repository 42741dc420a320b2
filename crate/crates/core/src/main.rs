//! Command-line front end.
//!
//! Exit codes: 0 success (and "member" verdicts), 1 usage or runtime error,
//! 2 negative verdicts (non-member, failed verification), 3 "unknown" from
//! the certificate dispatcher.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use semigap::{
    cache, certify, explain, is_member, membership::Membership, probe_powers, scan_with, table,
    verify, ConstraintProfile, GeneratorPair, Result, ScanOptions, ScanReport, Verdict,
};

#[derive(Parser)]
#[command(
    name = "semigap",
    version,
    about = "Membership, gaps, and certified witnesses for restricted two-generator semigroups",
    after_help = "The defaults reproduce the reference instance: generators (10, 11) with \
                  gcd(a,b) = 1 and b >= 2a + 1."
)]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Generator pair as "p,q"
    #[arg(long, global = true, default_value = "10,11", value_parser = parse_gens)]
    gens: GeneratorPair,

    /// Smallest admissible first coefficient
    #[arg(long, global = true, default_value_t = 0)]
    a_min: u64,

    /// Largest admissible first coefficient (unbounded when absent)
    #[arg(long, global = true)]
    a_max: Option<u64>,

    /// Slope of the linear bound b >= alpha*a + beta
    #[arg(long, global = true, default_value_t = 2)]
    alpha: u64,

    /// Offset of the linear bound b >= alpha*a + beta
    #[arg(long, global = true, default_value_t = 1, allow_negative_numbers = true)]
    beta: i64,

    /// Drop the gcd(a,b) = 1 requirement
    #[arg(long, global = true)]
    no_coprime: bool,

    /// Scan bound (inclusive)
    #[arg(long, global = true, default_value_t = 20_000)]
    bound: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Scan cache file; reused when generators, profile, and bound match
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker count for scans (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of one value; exit 0 when member, 2 when not
    Member { n: u64 },
    /// Scan [0, bound] and summarize members, gaps, and the maximum gap
    Scan,
    /// List the gaps inside [from, to]
    Gaps {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Largest gap per congruence class
    Classes,
    /// Emit the interval table
    Table {
        /// Comma-separated intervals "lo:hi,lo:hi" (default: canonical layout)
        #[arg(long, value_parser = parse_intervals)]
        intervals: Option<Intervals>,
    },
    /// Exponents j <= limit with base^j outside the set
    Probe {
        #[arg(long)]
        base: u64,
        #[arg(long)]
        limit: u32,
    },
    /// Certify one value through the fast-path rules (JSON output)
    Certify { n: u64 },
    /// Replay every published claim about the reference instance
    #[command(name = "verify-paper")]
    VerifyPaper,
}

#[derive(Clone)]
struct Intervals(Vec<(u64, u64)>);

fn parse_gens(s: &str) -> std::result::Result<GeneratorPair, String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected \"p,q\", got {s:?}"))?;
    let p: u64 = p.trim().parse().map_err(|e| format!("bad p: {e}"))?;
    let q: u64 = q.trim().parse().map_err(|e| format!("bad q: {e}"))?;
    GeneratorPair::new(p, q).map_err(|e| e.to_string())
}

fn parse_intervals(s: &str) -> std::result::Result<Intervals, String> {
    s.split(',')
        .map(|part| {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| format!("expected \"lo:hi\", got {part:?}"))?;
            let lo: u64 = lo.trim().parse().map_err(|e| format!("bad lo: {e}"))?;
            let hi: u64 = hi.trim().parse().map_err(|e| format!("bad hi: {e}"))?;
            Ok((lo, hi))
        })
        .collect::<std::result::Result<Vec<_>, String>>()
        .map(Intervals)
}

impl Config {
    fn profile(&self) -> ConstraintProfile {
        ConstraintProfile {
            a_min: self.a_min,
            a_max: self.a_max,
            alpha: self.alpha,
            beta: self.beta,
            require_coprime: !self.no_coprime,
        }
    }

    fn scan_options(&self) -> ScanOptions {
        ScanOptions {
            jobs: self.jobs,
            ..ScanOptions::default()
        }
    }

    /// Scan the configured instance, going through the cache when one is set.
    fn load_report(&self) -> Result<ScanReport> {
        let profile = self.profile();
        if let Some(path) = &self.cache {
            if let Some(hit) = cache::try_read(path, self.gens, &profile, self.bound)? {
                return Ok(hit);
            }
        }
        let report = scan_with(self.gens, &profile, self.bound, &self.scan_options())?;
        if let Some(path) = &self.cache {
            cache::write(path, &report)?;
        }
        Ok(report)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = cli.config.profile().validate() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = &cli.config;
    let profile = cfg.profile();
    match &cli.command {
        Command::Member { n } => {
            let result = is_member(*n, cfg.gens, &profile)?;
            if cfg.format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&result.to_json()).unwrap());
            } else if let Some(w) = result.witness {
                println!("Member, witness a={} b={}", w.a, w.b);
            } else {
                print!("{}", explain(*n, cfg.gens, &profile)?);
            }
            Ok(match result.status {
                Membership::Member => ExitCode::SUCCESS,
                Membership::NonMember => ExitCode::from(2),
            })
        }
        Command::Scan => {
            let report = cfg.load_report()?;
            print_scan(cfg, &report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gaps { from, to } => {
            let report = cfg.load_report()?;
            let gaps = report.gaps_in(*from, *to)?;
            match cfg.format {
                Format::Md => {
                    if gaps.is_empty() {
                        println!("none");
                    } else {
                        println!("{}", join_spaced(&gaps));
                    }
                }
                Format::Csv => {
                    println!("gap");
                    for g in &gaps {
                        println!("{g}");
                    }
                }
                Format::Json => {
                    let v = serde_json::json!({ "from": from, "to": to, "gaps": gaps });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes => {
            let report = cfg.load_report()?;
            print_classes(cfg, &report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { intervals } => {
            let report = cfg.load_report()?;
            let intervals = match intervals {
                Some(Intervals(list)) => list.clone(),
                None => table::default_intervals(cfg.bound),
            };
            let rows = table::build_rows(&report, &intervals)?;
            match cfg.format {
                Format::Md => print!("{}", table::render_markdown(&rows)),
                Format::Csv => print!("{}", table::render_csv(&rows)),
                Format::Json => println!("{}", table::render_json(&rows)?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe { base, limit } => {
            let exponents = probe_powers(cfg.gens, &profile, *base, *limit)?;
            match cfg.format {
                Format::Md => {
                    println!("generators {}, profile {profile}", cfg.gens);
                    if exponents.is_empty() {
                        println!("non-member exponents: none");
                    } else {
                        println!("non-member exponents: {}", join_spaced(&exponents));
                    }
                }
                Format::Csv => {
                    println!("exponent");
                    for e in &exponents {
                        println!("{e}");
                    }
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "base": base,
                        "exp_limit": limit,
                        "profile": profile,
                        "non_member_exponents": exponents,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { n } => {
            let verdict = certify(*n);
            println!("{}", serde_json::to_string_pretty(&verdict.to_json()).unwrap());
            Ok(match verdict {
                Verdict::Member(_) => ExitCode::SUCCESS,
                Verdict::NonMember { .. } => ExitCode::from(2),
                Verdict::Unknown => ExitCode::from(3),
            })
        }
        Command::VerifyPaper => {
            let vcfg = verify::VerifyConfig {
                gens: cfg.gens,
                profile,
                bound: cfg.bound,
                jobs: cfg.jobs,
            };
            let results = verify::run_checklist(&vcfg)?;
            let passed = results.iter().filter(|r| r.passed).count();
            if cfg.format == Format::Json {
                let v: Vec<_> = results
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "name": r.name, "passed": r.passed, "detail": r.detail,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                for r in &results {
                    println!("{} {} — {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
                }
                println!("result: {passed}/{} passed", results.len());
            }
            Ok(if passed == results.len() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn print_scan(cfg: &Config, report: &ScanReport) {
    match cfg.format {
        Format::Md => {
            println!("generators {}, profile {}", report.gens(), report.profile());
            println!(
                "bound {}: {} members, {} gaps, max gap {}",
                report.bound(),
                report.member_count(),
                report.gaps().len(),
                report
                    .max_gap()
                    .map(|g| g.to_string())
                    .unwrap_or_else(|| "none".into())
            );
            println!(
                "note: exhaustive only within [0, {}]; values beyond the bound are unverified",
                report.bound()
            );
            if !report.gaps().is_empty() {
                println!("gaps: {}", join_spaced(report.gaps()));
            }
        }
        Format::Csv => {
            println!("gap");
            for g in report.gaps() {
                println!("{g}");
            }
        }
        Format::Json => {
            let v = serde_json::json!({
                "generators": [report.gens().p(), report.gens().q()],
                "profile": report.profile(),
                "bound": report.bound(),
                "member_count": report.member_count(),
                "gap_count": report.gaps().len(),
                "max_gap": report.max_gap(),
                "certified_beyond": report.certified_beyond(),
                "gaps": report.gaps(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
}

fn print_classes(cfg: &Config, report: &ScanReport) {
    let q = report.gens().q();
    let labels: Vec<semigap::ClassLabel> = (1..q)
        .map(semigap::ClassLabel::Class)
        .chain(std::iter::once(semigap::ClassLabel::MultipleOfQ))
        .collect();
    match cfg.format {
        Format::Md => {
            println!("| class | max gap |");
            println!("| --- | --- |");
            for label in &labels {
                let max = report.class_maxima().get(label);
                println!(
                    "| {} | {} |",
                    label.name(q),
                    max.map(|m| m.to_string()).unwrap_or_else(|| "none".into())
                );
            }
        }
        Format::Csv => {
            println!("class,max_gap");
            for label in &labels {
                let max = report.class_maxima().get(label);
                println!(
                    "{},{}",
                    label.name(q),
                    max.map(|m| m.to_string()).unwrap_or_default()
                );
            }
        }
        Format::Json => {
            let v: Vec<_> = labels
                .iter()
                .map(|label| {
                    serde_json::json!({
                        "class": label.name(q),
                        "max_gap": report.class_maxima().get(label),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&serde_json::json!({"classes": v})).unwrap());
        }
    }
}

fn join_spaced<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
