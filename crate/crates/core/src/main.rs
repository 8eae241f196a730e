use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gradedinv::io::{parse_divisor, parse_object};
use gradedinv::report::{self, render_scenario, render_text, to_json};
use gradedinv::scenario::{self, run_scenario, Scenario, ScenarioReport};
use gradedinv::sectionring::SectionRing;
use gradedinv::sections::minimal_generator_counts;
use gradedinv::Error;

#[derive(Parser)]
#[command(name = "gradedinv", version, about = "Graded invariants of section rings, covers and Segre products")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Scan window LO..HI.
    #[arg(long, global = true, default_value = "-20..20", value_parser = parse_window, allow_hyphen_values = true)]
    window: (i64, i64),
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Search bound for torsion orders.
    #[arg(long, global = true, default_value_t = scenario::DEFAULT_BOUND)]
    bound: u64,
    /// Largest section basis to materialize.
    #[arg(long, global = true)]
    max_basis: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// Rounding, fractional part and degree of a divisor.
    Divisor {
        #[arg(long)]
        input: PathBuf,
    },
    /// Section ring invariants.
    Ring {
        #[arg(long)]
        input: PathBuf,
    },
    /// Canonical cover, or the cyclic cover of `--class`.
    Cover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        class: Option<PathBuf>,
    },
    /// Segre product of two rings or covers, with the Künneth breakdown.
    Segre {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Minimal generator counts from explicit sections.
    Sections {
        #[arg(long)]
        input: PathBuf,
        /// Highest degree examined.
        #[arg(long, default_value_t = 4)]
        top: i64,
        /// Also print the bases.
        #[arg(long)]
        dump: bool,
    },
    /// Built-in cases; with no `--case` or `--scenario`, runs all of them.
    Paper {
        /// example-3.5, example-4.5, griffith, theorem-6.1, goto-watanabe
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        /// Scenario file to run instead of a built-in case.
        #[arg(long)]
        scenario: Option<PathBuf>,
    },
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err("LO exceeds HI".into());
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Engine(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) | Error::Scenario(_) => Failure::Usage(e.to_string()),
            other => Failure::Engine(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(g: &Global, title: &str, value: &T) {
    if g.json {
        println!("{}", to_json(value));
    } else {
        print!("{}", render_text(title, &serde_json::to_value(value).expect("serializable")));
    }
}

fn paper_case(
    case: &str,
    d: Option<u32>,
    r: Option<u32>,
    n: Option<u32>,
    m: Option<u32>,
) -> Result<Vec<Scenario>, Failure> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("`{case}` needs --{flag}")));
    let name = match case {
        "example-3.5" => format!("example-3.5-r{}-n{}-m{}", need(r, "r")?, need(n, "n")?, need(m, "m")?),
        "griffith" => format!("griffith-d{}-r{}", need(d, "d")?, r.unwrap_or(1)),
        "theorem-6.1" => match d {
            Some(d) => format!("theorem-6.1-d{d}"),
            None => return Ok((3..=6).map(scenario::theorem_6_1).collect()),
        },
        other => other.to_string(),
    };
    Ok(vec![scenario::lookup(&name)?])
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Divisor { input } => {
            let j = parse_divisor(&read(&input)?)?;
            let d = j.to_divisor()?;
            emit(g, "divisor", &report::divisor_report(&d, j.variables.clone()));
            Ok(true)
        }
        Command::Ring { input } => {
            let d = parse_divisor(&read(&input)?)?.to_divisor()?;
            let r = SectionRing::new(d)?;
            emit(g, "section ring", &report::ring_report(&r, g.window, g.bound)?);
            Ok(true)
        }
        Command::Cover { input, class } => {
            let r = SectionRing::new(parse_divisor(&read(&input)?)?.to_divisor()?)?;
            let f = match class {
                Some(p) => Some(parse_divisor(&read(&p)?)?.to_divisor()?),
                None => None,
            };
            let c = report::build_cover(&r, f.as_ref(), g.bound)?;
            let rep = report::cover_report(&c, g.window)?;
            let ok = rep.quasi_gorenstein != Some(false);
            emit(g, "cover", &rep);
            Ok(ok)
        }
        Command::Segre { left, right } => {
            let a = parse_object(&read(&left)?)?.build(g.bound)?;
            let b = parse_object(&read(&right)?)?.build(g.bound)?;
            emit(g, "segre product", &report::segre_report(&a, &b)?);
            Ok(true)
        }
        Command::Sections { input, top, dump } => {
            let mut ctx = parse_divisor(&read(&input)?)?.section_context()?;
            if let Some(limit) = g.max_basis {
                ctx = ctx.with_max_basis(limit);
            }
            let counts = minimal_generator_counts(&ctx, top)?;
            emit(g, "sections", &report::sections_report(&ctx, counts, top, dump)?);
            Ok(true)
        }
        Command::Paper { case, d, r, n, m, scenario } => {
            let mut scenarios = match (&case, &scenario) {
                (Some(_), Some(_)) => return Err(Failure::Usage("give --case or --scenario, not both".into())),
                (Some(c), None) => paper_case(c, d, r, n, m)?,
                (None, Some(p)) => vec![Scenario::parse(&read(p)?)?],
                (None, None) => scenario::registry(),
            };
            for s in &mut scenarios {
                s.window.get_or_insert(g.window);
                s.bound.get_or_insert(g.bound);
            }
            let reports: Vec<ScenarioReport> = scenarios.iter().map(run_scenario).collect();
            if g.json {
                println!("{}", to_json(&reports));
            } else {
                for r in &reports {
                    println!("{}", render_scenario(r));
                }
            }
            Ok(reports.iter().all(|r| r.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
