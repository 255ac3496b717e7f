//! `pgro`: reduced Gröbner bases for modular p-group algebras.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pgro::corpus::load_corpus;
use pgro::dump::{basis_file, nontips_file};
use pgro::engine::build_context;
use pgro::error::{Error, Result};
use pgro::experiment::run_experiment;
use pgro::group::{close_group, parse_group_file, PGroup, SelectionMethod};
use pgro::jennings::{jennings_series, layer_polynomial};
use pgro::pipeline::{default_selection, run_pipeline};
use pgro::words::OrderingKind;

#[derive(Parser)]
#[command(
    name = "pgro",
    version,
    about = "Reduced Gröbner bases for modular p-group algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    Ll,
    Rll,
    Jennings,
}

impl From<OrderingArg> for OrderingKind {
    fn from(arg: OrderingArg) -> Self {
        match arg {
            OrderingArg::Ll => OrderingKind::Ll,
            OrderingArg::Rll => OrderingKind::Rll,
            OrderingArg::Jennings => OrderingKind::Jennings,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SelectionArg {
    Arbitrary,
    Smallest,
}

impl From<SelectionArg> for SelectionMethod {
    fn from(arg: SelectionArg) -> Self {
        match arg {
            SelectionArg::Arbitrary => SelectionMethod::Arbitrary,
            SelectionArg::Smallest => SelectionMethod::SmallestExponent,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print structural statistics of a group file.
    Info { file: PathBuf },
    /// Compute one Gröbner basis and write the nontips and basis files.
    Grobner {
        file: PathBuf,
        #[arg(long, value_enum)]
        ordering: OrderingArg,
        /// Generator selection; defaults to smallest for ll, arbitrary
        /// otherwise.
        #[arg(long, value_enum)]
        selection: Option<SelectionArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the file's defining generators instead of random ones.
        #[arg(long)]
        use_given_generators: bool,
        /// Output directory.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Repeated basis computations with statistics, on a file or a
    /// directory of group files.
    Experiment {
        path: PathBuf,
        #[arg(long, value_enum)]
        ordering: OrderingArg,
        #[arg(long, value_enum)]
        selection: Option<SelectionArg>,
        #[arg(long, default_value_t = 20)]
        attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the reports as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Inspect or export the bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List the bundled groups.
    List,
    /// Write every bundled group file into a directory.
    Dump {
        #[arg(short, long, default_value = "corpus")]
        output: PathBuf,
    },
}

fn load_group(path: &Path) -> Result<PGroup> {
    let text = fs::read_to_string(path)?;
    let file = parse_group_file(&text)?;
    close_group(&file.generator_permutations()?)
}

fn cmd_info(path: &Path) -> Result<()> {
    let group = load_group(path)?;
    let ctx = build_context(&group, group.generator_indices())?;
    let series = jennings_series(&group);
    let counts = series.layer_counts(group.prime());
    let layers = ctx.radical_layers();
    let n = group.n() as usize;

    println!("file: {}", path.display());
    println!("order: {} = {}^{}", group.order(), group.prime(), group.n());
    println!("prime: {}", group.prime());
    println!("permutation degree: {}", group.degree());
    println!("nilpotency degree: {}", ctx.nilpotency());
    println!(
        "jennings layer counts: {}",
        counts
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!(
        "radical layer dimensions: {}",
        layers
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    // Cross-check the layers against the Jennings layer polynomial.
    let poly = layer_polynomial(&counts, group.prime());
    if poly.iter().map(|&c| c as usize).collect::<Vec<_>>() != layers {
        return Err(Error::Internal(
            "radical layers disagree with the layer polynomial".into(),
        ));
    }
    println!("jennings basis size: {}", n * (n + 1) / 2);
    Ok(())
}

fn cmd_grobner(
    path: &Path,
    kind: OrderingKind,
    selection: Option<SelectionMethod>,
    seed: u64,
    use_given: bool,
    output: &Path,
) -> Result<()> {
    let group = load_group(path)?;
    let selection = selection.unwrap_or_else(|| default_selection(kind));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let run = run_pipeline(&group, kind, selection, &mut rng, use_given)?;

    fs::create_dir_all(output)?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "group".into());
    let nontips_path = output.join(format!("{stem}.{}.nontips", kind.tag()));
    let basis_path = output.join(format!("{stem}.{}.basis", kind.tag()));
    fs::write(
        &nontips_path,
        nontips_file(
            &run.tree,
            group.prime(),
            group.n(),
            run.context.nilpotency(),
        ),
    )?;
    fs::write(&basis_path, basis_file(&run.basis, &run.tree))?;

    println!(
        "order {} = {}^{}, ordering {}, basis size {}",
        group.order(),
        group.prime(),
        group.n(),
        kind.tag(),
        run.basis.len()
    );
    println!("wrote {}", nontips_path.display());
    println!("wrote {}", basis_path.display());
    Ok(())
}

fn cmd_experiment(
    path: &Path,
    kind: OrderingKind,
    selection: Option<SelectionMethod>,
    attempts: usize,
    seed: u64,
    json: bool,
) -> Result<()> {
    let selection = selection.unwrap_or_else(|| default_selection(kind));
    let mut files = Vec::new();
    if path.is_dir() {
        for entry in fs::read_dir(path)? {
            let p = entry?.path();
            if p.is_file() {
                files.push(p);
            }
        }
        files.sort();
        if files.is_empty() {
            return Err(Error::InvalidInput(format!(
                "no group files in {}",
                path.display()
            )));
        }
    } else {
        files.push(path.to_path_buf());
    }

    let mut reports = Vec::new();
    for file in &files {
        let group = load_group(file)?;
        let label = file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| file.display().to_string());
        reports.push(run_experiment(
            &group, &label, kind, selection, attempts, seed,
        )?);
    }

    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports)
                .map_err(|e| Error::Internal(format!("report serialization failed: {e}")))?
        );
    } else {
        for r in &reports {
            println!("{}", r.text_line());
        }
    }
    Ok(())
}

fn cmd_corpus(action: CorpusCommand) -> Result<()> {
    let corpus = load_corpus();
    match action {
        CorpusCommand::List => {
            for e in &corpus {
                println!("{:8} order {:4}  {}", e.label, e.order, e.description);
            }
        }
        CorpusCommand::Dump { output } => {
            fs::create_dir_all(&output)?;
            for e in &corpus {
                let path = output.join(format!("{}.grp", e.label));
                fs::write(&path, &e.content)?;
                println!("wrote {}", path.display());
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Info { file } => cmd_info(&file),
        Command::Grobner {
            file,
            ordering,
            selection,
            seed,
            use_given_generators,
            output,
        } => cmd_grobner(
            &file,
            ordering.into(),
            selection.map(Into::into),
            seed,
            use_given_generators,
            &output,
        ),
        Command::Experiment {
            path,
            ordering,
            selection,
            attempts,
            seed,
            json,
        } => cmd_experiment(
            &path,
            ordering.into(),
            selection.map(Into::into),
            attempts,
            seed,
            json,
        ),
        Command::Corpus { action } => cmd_corpus(action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
