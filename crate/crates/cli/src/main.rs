//! `magma-lab`: analysis of finite magmas from the command line.
//!
//! Exit status: 0 when the checked property holds or verification passes,
//! 1 when it fails, 2 on usage, parse or bound errors.

mod input;

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use magma_lab::census::{self, CensusOptions, CensusReport, Progress};
use magma_lab::constructions::{bin_product, direct_product_with_limit, DEFAULT_PRODUCT_MAX};
use magma_lab::morphisms::{canonical_form, homomorphisms, is_isomorphic};
use magma_lab::relations::{self, leq};
use magma_lab::subalgebra::subgroupoid_listing;
use magma_lab::theorems::{self, TheoremReport};
use magma_lab::{Filter, Magma, Property, PropertyVerdict};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "magma-lab",
    version,
    about = "Finite groupoid analysis: properties, censuses, bounded theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Emit JSON instead of the text table.
#[derive(Args, Clone, Copy)]
struct Output {
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate properties of a magma (file, `-` for stdin, or `family:params`).
    Check {
        input: String,
        /// Property to evaluate; repeatable. Without it, all are reported.
        #[arg(long = "property", short)]
        properties: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Count magmas of one order that satisfy a filter such as `right-feeble+!group`.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "always")]
        property: String,
        #[arg(long)]
        up_to_iso: bool,
        /// Defaults to $MAGMALAB_SHARDS, then the number of worker threads.
        #[arg(long)]
        shards: Option<usize>,
        #[arg(long, value_enum)]
        restrict: Option<Restriction>,
        #[arg(long)]
        allow_long_run: bool,
        /// Report progress on stderr.
        #[arg(long)]
        progress: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run bounded checks from the theorem registry.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        /// List registry entries and their bounds.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Direct product; pairs are indexed `x * |B| + u`.
    Product {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_PRODUCT_MAX)]
        max_order: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Product of binary operations on the same carrier: `(x*y) . (y*x)`.
    Binprod {
        left: String,
        right: String,
        #[command(flatten)]
        out: Output,
    },
    /// List subgroupoids, flagging the divisible ones.
    Subs {
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Lexicographically least relabeled table.
    Canon {
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Find an isomorphism; exit 1 if none exists.
    Iso {
        left: String,
        right: String,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate homomorphisms; exit 1 if none exists.
    Hom {
        source: String,
        target: String,
        #[arg(long)]
        surjective: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Print the reachability relation and its order properties.
    Relation {
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Emit a named magma in the text format.
    Gen {
        /// One of the families listed in the README.
        family: String,
        params: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Restriction {
    RightEntire,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the command's claim held.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Check { input, properties, out } => check(&input::load(&input)?, &properties, out),
        Command::Census { order, property, up_to_iso, shards, restrict, allow_long_run, progress, out } => {
            let filter: Filter = property.parse()?;
            let mut options = CensusOptions::default().up_to_iso(up_to_iso).allow_long_run(allow_long_run);
            if let Some(k) = shards.or_else(shards_from_env) {
                if k == 0 {
                    bail!("shard count must be positive");
                }
                options = options.shards(k);
            }
            if progress {
                options.progress = Some(Arc::new(|p: Progress| {
                    eprint!("\r{} / {} tables", p.scanned, p.total);
                    if p.scanned == p.total {
                        eprintln!();
                    }
                }));
            }
            let name = filter.to_string();
            let matches = |m: &Magma| filter.matches(m);
            let report = match restrict {
                None => census::enumerate(order, &name, matches, &options)?,
                Some(Restriction::RightEntire) => census::enumerate_right_entire(order, &name, matches, &options)?,
            };
            print_census(&report, out);
            Ok(true)
        }
        Command::Verify { theorem, all, list, max_order, out } => {
            if list {
                print_registry(out);
                return Ok(true);
            }
            let reports = if all {
                theorems::verify_all(max_order)
            } else {
                let id = theorem.expect("clap requires --theorem without --all");
                let found = theorems::find(&id)?;
                vec![theorems::verify(&id, max_order.unwrap_or(found.default_order))?]
            };
            print_reports(&reports, out);
            Ok(reports.iter().all(TheoremReport::passed))
        }
        Command::Product { left, right, max_order, out } => {
            let p = direct_product_with_limit(&input::load(&left)?, &input::load(&right)?, max_order)?;
            print_magma(&p, out);
            Ok(true)
        }
        Command::Binprod { left, right, out } => {
            print_magma(&bin_product(&input::load(&left)?, &input::load(&right)?)?, out);
            Ok(true)
        }
        Command::Subs { input, out } => {
            let m = input::load(&input)?;
            let listing = subgroupoid_listing(&m)?;
            if out.json {
                println!("{}", json!({ "order": m.order(), "subgroupoids": listing }));
            } else {
                for entry in &listing {
                    let tag = if entry.divisible { "divisible" } else { "" };
                    println!("{:<24} {tag}", format_set(&entry.members.to_vec()));
                }
            }
            Ok(true)
        }
        Command::Canon { input, out } => {
            let canon = canonical_form(&input::load(&input)?)?;
            print_magma(&canon.to_magma(), out);
            Ok(true)
        }
        Command::Iso { left, right, out } => {
            let sigma = is_isomorphic(&input::load(&left)?, &input::load(&right)?);
            if out.json {
                println!("{}", json!({ "isomorphic": sigma.is_some(), "map": sigma }));
            } else {
                match &sigma {
                    Some(s) => println!("isomorphic via {}", format_list(s)),
                    None => println!("not isomorphic"),
                }
            }
            Ok(sigma.is_some())
        }
        Command::Hom { source, target, surjective, out } => {
            let (a, b) = (input::load(&source)?, input::load(&target)?);
            let maps: Vec<Vec<usize>> = homomorphisms(&a, &b, surjective)?.into_iter().map(|h| h.map).collect();
            if out.json {
                println!("{}", json!({ "surjective_only": surjective, "count": maps.len(), "maps": maps }));
            } else {
                println!("{} homomorphism(s)", maps.len());
                for map in &maps {
                    println!("{}", format_list(map));
                }
            }
            Ok(!maps.is_empty())
        }
        Command::Relation { input, out } => {
            let m = input::load(&input)?;
            let r = leq(&m);
            let verdicts = [relations::is_reflexive(&r), relations::is_antisymmetric(&r), relations::is_transitive(&r)];
            if out.json {
                println!("{}", json!({ "order": m.order(), "matrix": r.matrix(), "verdicts": verdicts }));
            } else {
                print!("{r}");
                print_verdicts(&verdicts);
            }
            Ok(true)
        }
        Command::Gen { family, params, out } => {
            let params = input::parse_params(params.iter().map(String::as_str))?;
            print_magma(&input::build(&family, &params)?, out);
            Ok(true)
        }
    }
}

fn shards_from_env() -> Option<usize> {
    std::env::var("MAGMALAB_SHARDS").ok()?.trim().parse().ok()
}

fn check(m: &Magma, names: &[String], out: Output) -> Result<bool> {
    let explicit = !names.is_empty();
    let properties: Vec<Property> = if explicit {
        names.iter().map(|n| n.parse()).collect::<Result<_, _>>()?
    } else {
        Property::ALL
            .into_iter()
            .filter(|&p| p != Property::Always)
            .filter(|&p| p != Property::Center || m.order() <= magma_lab::properties::CENTER_MAX_ORDER)
            .collect()
    };
    let verdicts = properties.iter().map(|p| p.verdict(m)).collect::<Result<Vec<_>, _>>()?;
    if out.json {
        println!("{}", json!({ "order": m.order(), "verdicts": verdicts }));
    } else {
        print_verdicts(&verdicts);
    }
    // a plain profile is informational; explicit properties set the status
    Ok(!explicit || verdicts.iter().all(|v| v.holds))
}

fn print_verdicts(verdicts: &[PropertyVerdict]) {
    let width = verdicts.iter().map(|v| v.property.len()).max().unwrap_or(0);
    for v in verdicts {
        let status = if v.holds { "holds" } else { "fails" };
        match &v.witness {
            Some(w) => println!("{:<width$}  {status:<5}  witness {}", v.property, format_list(w)),
            None => println!("{:<width$}  {status}", v.property),
        }
    }
}

fn print_magma(m: &Magma, out: Output) {
    if out.json {
        println!("{}", m.to_json());
    } else {
        print!("{}", m.render());
    }
}

fn print_census(r: &CensusReport, out: Output) {
    if out.json {
        println!("{}", r.to_json());
        return;
    }
    let iso = r.matches_up_to_iso.map_or_else(|| "-".to_owned(), |k| k.to_string());
    let first = r.first_match.as_ref().map_or_else(|| "-".to_owned(), |m| format_list(m.flat()));
    let rows = [
        ("order", r.order.to_string()),
        ("filter", r.filter.clone()),
        ("family", r.family.to_owned()),
        ("total", r.total.to_string()),
        ("matches", r.matches.to_string()),
        ("up to iso", iso),
        ("first match", first),
        ("shards", r.shards.to_string()),
        ("elapsed ms", r.elapsed_ms.to_string()),
    ];
    for (key, value) in rows {
        println!("{key:<12} {value}");
    }
}

fn print_reports(reports: &[TheoremReport], out: Output) {
    if out.json {
        println!("{}", serde_json::to_string(reports).expect("reports serialize"));
        return;
    }
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    for r in reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(w, "{verdict}  {:<width$}  {:>7} ms  {}", r.id, r.elapsed_ms, r.bound);
        if let Some(cx) = &r.counterexample {
            let _ = writeln!(w, "      {}: {} fails, witness {}", cx.detail, cx.property, format_list(&cx.witness));
            let _ = write!(w, "{}", indent(&cx.subject.render()));
            for labeled in &cx.context {
                let _ = writeln!(w, "      {}:", labeled.label);
                let _ = write!(w, "{}", indent(&labeled.magma.render()));
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(w, "{passed}/{} passed", reports.len());
}

fn print_registry(out: Output) {
    let entries: Vec<_> = theorems::registry()
        .iter()
        .map(|t| json!({ "id": t.id, "claim": t.claim, "default_order": t.default_order, "max_order": t.max_order }))
        .collect();
    if out.json {
        println!("{}", serde_json::Value::Array(entries));
        return;
    }
    for t in theorems::registry() {
        println!("{:<24} {}..{}  {}", t.id, t.default_order, t.max_order, t.claim);
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("        {l}\n")).collect()
}

fn format_list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", parts.join(", "))
}

fn format_set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}
