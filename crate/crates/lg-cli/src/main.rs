//! `lg`: compute Links-Gould invariants of braid closures and run the
//! verification suite from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lg_core::braid::{BraidWord, LinkTable};
use lg_core::statemodel::StateModel;
use lg_core::verify;

#[derive(Parser)]
#[command(name = "lg", about = "Exact Links-Gould link invariants LG^m from braid words", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute LG^m of the closure of a braid word or a named link.
    Compute(ComputeArgs),
    /// Run the model verification checks.
    Verify(VerifyArgs),
    /// Evaluate the golden corpus and compare against the tabulated values.
    Golden(GoldenArgs),
    /// List the link table.
    Links(LinksArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Which invariant to compute (1..4).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    m: u8,
    /// Braid word as whitespace-separated signed generator indices.
    #[arg(long, conflicts_with = "link", required_unless_present = "link")]
    braid: Option<String>,
    /// Link name from the table.
    #[arg(long)]
    link: Option<String>,
    /// Strand count override (required for identity braids).
    #[arg(long)]
    strands: Option<usize>,
    /// Strand left open by the closure (1-based; default: rightmost).
    #[arg(long)]
    open_strand: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Paper)]
    format: Format,
    /// Alternative link table (JSON).
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to one m (default: all of 1..4).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    m: Option<u8>,
    /// Comma-separated checks: qybe,matveev,r1,handles,symmetry.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Alternative link table (used by the symmetry check).
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct GoldenArgs {
    /// Restrict to one m (default: 1..4).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    m: Option<u8>,
    /// Alternative link table (JSON).
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct LinksArgs {
    /// Alternative link table (JSON).
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Paper,
    Json,
}

fn load_table(path: &Option<PathBuf>) -> Result<LinkTable, String> {
    match path {
        None => Ok(LinkTable::shipped()),
        Some(p) => LinkTable::from_path(p).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Compute(args) => {
            let table = load_table(&args.table)?;
            let (word, link_name) = match (&args.braid, &args.link) {
                (Some(text), None) => {
                    (BraidWord::parse(text, args.strands).map_err(|e| e.to_string())?, None)
                }
                (None, Some(name)) => {
                    let entry = table.lookup(name).map_err(|e| e.to_string())?;
                    (entry.word().map_err(|e| e.to_string())?, Some(name.clone()))
                }
                _ => return Err("exactly one of --braid / --link is required".to_string()),
            };
            if let Some(open) = args.open_strand {
                if open < 1 || open > word.strands() {
                    return Err(format!(
                        "open strand {} out of range for {} strands",
                        open,
                        word.strands()
                    ));
                }
            }
            let mut result = lg_core::compute(args.m, &word, args.open_strand)
                .map_err(|e| e.to_string())?;
            if let Some(name) = link_name {
                result = result.named(&name);
            }
            match args.format {
                Format::Paper => println!("{}", result.render_paper()),
                Format::Json => println!("{}", result.render_machine()),
            }
            Ok(true)
        }
        Command::Verify(args) => {
            let table = load_table(&args.table)?;
            let ms: Vec<u8> = args.m.map(|m| vec![m]).unwrap_or_else(|| (1..=4).collect());
            let all = ["qybe", "matveev", "r1", "handles", "symmetry"];
            let selected: Vec<String> = match &args.checks {
                None => all.iter().map(|s| s.to_string()).collect(),
                Some(list) => {
                    for c in list {
                        if !all.contains(&c.as_str()) {
                            return Err(format!("unknown check {:?}", c));
                        }
                    }
                    list.clone()
                }
            };
            let mut ok = true;
            for m in ms {
                let model = StateModel::build(m).map_err(|e| e.to_string())?;
                for check in &selected {
                    match check.as_str() {
                        "qybe" => report(&mut ok, &[verify::check_qybe(&model)]),
                        "matveev" => report(&mut ok, &[verify::check_matveev(&model)]),
                        "r1" => report(&mut ok, &[verify::check_r1(&model)]),
                        "handles" => report(&mut ok, &[verify::check_handles(&model)]),
                        "symmetry" => {
                            let reports = symmetry_reports(&model, &table)?;
                            report(&mut ok, &reports);
                        }
                        _ => unreachable!(),
                    }
                }
            }
            Ok(ok)
        }
        Command::Golden(args) => {
            let table = load_table(&args.table)?;
            let ms: Vec<u8> = args.m.map(|m| vec![m]).unwrap_or_else(|| (1..=4).collect());
            let mut ok = true;
            for m in ms {
                let reports = verify::run_golden(m, &table);
                report(&mut ok, &reports);
            }
            Ok(ok)
        }
        Command::Links(args) => {
            let table = load_table(&args.table)?;
            for entry in table.entries() {
                println!(
                    "{}\tstrands {}\tcomponents {}\tword {}",
                    entry.name,
                    entry.strands,
                    entry.components,
                    entry
                        .letters
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(true)
        }
    }
}

fn symmetry_reports(model: &StateModel, table: &LinkTable) -> Result<Vec<verify::CheckReport>, String> {
    let mut out = Vec::new();
    for entry in lg_core::golden::corpus_for(model.m()) {
        let link = table.lookup(&entry.link).map_err(|e| e.to_string())?;
        let word = link.word().map_err(|e| e.to_string())?;
        let result = lg_core::compute_with_model(model, &word, None)
            .map_err(|e| e.to_string())?
            .named(&entry.link);
        out.push(verify::check_symmetry(&result));
    }
    Ok(out)
}

fn report(ok: &mut bool, reports: &[verify::CheckReport]) {
    for r in reports {
        println!("{}", r.line());
        if !r.passed {
            *ok = false;
        }
    }
}
