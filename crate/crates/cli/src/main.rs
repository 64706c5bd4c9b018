use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use cocomp::catalog::{lookup, AlgebraHandle, Rendered};
use cocomp::combinat::{enumerate_basis, Family};
use cocomp::named::DeltaVariant;
use cocomp::operadic::Flavor;
use cocomp::verify::{default_suite, run_suite, Status};
use cocomp::Error;

/// Compute in compositions of combinatorial Hopf algebras.
#[derive(Parser)]
#[command(name = "cocomp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coproduct of an element.
    Coproduct {
        #[command(flatten)]
        target: Target,
        element: String,
    },
    /// Product of two elements.
    Product {
        #[command(flatten)]
        target: Target,
        left: String,
        right: String,
    },
    /// Antipode of an element, or of every basis element up to a degree.
    Antipode {
        #[command(flatten)]
        target: Target,
        #[arg(long, env = "COCOMP_MAX_DEGREE", default_value_t = 3)]
        max_degree: usize,
        element: Option<String>,
    },
    /// Coaction ρ = (1⊗f)Δ of a connected algebra.
    Coaction {
        #[command(flatten)]
        target: Target,
        element: String,
    },
    /// Dimensions of the graded components.
    Dims {
        #[command(flatten)]
        target: Target,
        #[arg(long, env = "COCOMP_MAX_DEGREE", default_value_t = 5)]
        max: usize,
    },
    /// Dimensions of the primitive subspaces.
    Primitives {
        #[command(flatten)]
        target: Target,
        #[arg(long, env = "COCOMP_MAX_DEGREE", default_value_t = 5)]
        max: usize,
        /// Print a kernel basis in each degree.
        #[arg(long)]
        vectors: bool,
    },
    /// Run the law-checking suite.
    #[command(group(ArgGroup::new("scope").required(true).args(["all", "algebra"])))]
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        algebra: Option<String>,
        /// Restrict to one check (coalgebra, bialgebra, unit, antipode, ...).
        #[arg(long)]
        check: Option<String>,
        /// Overrides every check's default degree.
        #[arg(long, env = "COCOMP_MAX_DEGREE")]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the basis of one degree.
    #[command(group(ArgGroup::new("source").required(true).args(["family", "algebra"])))]
    Enumerate {
        /// trees, perms, combs, painted, composite, compositions or subsets.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    algebra: String,
    /// Side of the connection for `cc`.
    #[arg(long)]
    flavor: Option<String>,
    /// Product transport for `deltasym`: swap or noswap.
    #[arg(long)]
    variant: Option<String>,
    /// Defaults to csv for `dims` and `primitives`, text otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

impl Target {
    fn format(&self) -> Format {
        self.format.unwrap_or(Format::Text)
    }

    fn table_format(&self) -> Format {
        self.format.unwrap_or(Format::Csv)
    }

    fn handle(&self) -> Result<Box<dyn AlgebraHandle>, Error> {
        let flavor = self.flavor.as_deref().map(str::parse::<Flavor>).transpose()?;
        let variant = self.variant.as_deref().map(str::parse::<DeltaVariant>).transpose()?;
        lookup(&self.algebra, flavor, variant)
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::UnknownAlgebra(_) => 3,
        Error::Parse(_) | Error::ArityMismatch { .. } | Error::NotAPermutation(_) | Error::RepeatedLetter(_) => 4,
        Error::CapExceeded { .. } => 5,
        _ => 2,
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn emit(out: &mut String, rendered: &Rendered, format: Format) {
    match format {
        Format::Json => out.push_str(&json(rendered)),
        _ => out.push_str(&rendered.text),
    }
    out.push('\n');
}

fn csv(out: &mut String, header: &str, values: impl IntoIterator<Item = String>) {
    out.push_str(header);
    out.push('\n');
    for (n, v) in values.into_iter().enumerate() {
        out.push_str(&format!("{n},{v}\n"));
    }
}

fn run(command: Command, out: &mut String) -> Result<bool, Error> {
    match command {
        Command::Coproduct { target, element } => emit(out, &target.handle()?.coproduct(&element)?, target.format()),
        Command::Product { target, left, right } => emit(out, &target.handle()?.product(&left, &right)?, target.format()),
        Command::Coaction { target, element } => emit(out, &target.handle()?.coaction(&element)?, target.format()),
        Command::Antipode {
            target,
            max_degree,
            element,
        } => {
            let handle = target.handle()?;
            match element {
                Some(e) => emit(out, &handle.antipode(&e)?, target.format()),
                None => {
                    let table = handle.antipode_table(max_degree)?;
                    if target.format() == Format::Json {
                        let rows: Vec<_> = table
                            .iter()
                            .map(|(b, s)| serde_json::json!({ "basis": b, "antipode": s }))
                            .collect();
                        out.push_str(&json(&rows));
                        out.push('\n');
                    } else {
                        for (b, s) in table {
                            out.push_str(&format!("S({b}) = {s}\n"));
                        }
                    }
                }
            }
        }
        Command::Dims { target, max } => {
            let handle = target.handle()?;
            let dims = handle.dims(max);
            match target.table_format() {
                Format::Json => {
                    out.push_str(&json(&serde_json::json!({ "algebra": handle.name(), "dims": dims })));
                    out.push('\n');
                }
                Format::Text => {
                    let line: Vec<String> = dims.iter().map(ToString::to_string).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
                Format::Csv => csv(out, "n,dim", dims.iter().map(ToString::to_string)),
            }
        }
        Command::Primitives { target, max, vectors } => {
            let handle = target.handle()?;
            let dims = handle.primitives(max)?;
            let format = target.table_format();
            if format == Format::Json {
                let mut value = serde_json::json!({ "algebra": handle.name(), "primitives": dims });
                if vectors {
                    let by_degree = (1..=max).map(|k| handle.primitive_vectors(k)).collect::<Result<Vec<_>, _>>()?;
                    value["vectors"] = serde_json::to_value(by_degree).expect("serializable");
                }
                out.push_str(&json(&value));
                out.push('\n');
            } else if format == Format::Text && !vectors {
                let line: Vec<String> = dims.iter().map(ToString::to_string).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            } else {
                csv(out, "n,primitives", dims.iter().map(ToString::to_string));
                if vectors {
                    for k in 1..=max {
                        for v in handle.primitive_vectors(k)? {
                            out.push_str(&format!("# {k}: {v}\n"));
                        }
                    }
                }
            }
        }
        Command::Enumerate {
            family,
            algebra,
            degree,
            format,
        } => {
            let items: Vec<String> = match (family, algebra) {
                (Some(f), _) => {
                    let family: Family = f.parse()?;
                    let size_from = match family {
                        Family::Trees => "ysym",
                        Family::Perms => "ssym",
                        Family::Combs => "csym",
                        Family::Painted => "psym",
                        Family::Composite => "cksym",
                        Family::Compositions => "cc",
                        Family::Subsets => "deltasym",
                    };
                    // enumerate through the matching algebra first so the size cap applies
                    lookup(size_from, None, None)?.enumerate(degree)?;
                    enumerate_basis(family, degree).iter().map(ToString::to_string).collect()
                }
                (None, Some(a)) => lookup(&a, None, None)?.enumerate(degree)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            if format == Format::Json {
                out.push_str(&json(&items));
                out.push('\n');
            } else {
                for item in items {
                    out.push_str(&item);
                    out.push('\n');
                }
            }
        }
        Command::Verify {
            all,
            algebra,
            check,
            max_degree,
            format,
        } => {
            let mut entries = default_suite();
            if !all {
                if let Some(a) = &algebra {
                    entries.retain(|e| &e.algebra == a || (a == "cc" && e.algebra.starts_with("cc-")));
                    if entries.is_empty() {
                        return Err(Error::UnknownAlgebra(a.clone()));
                    }
                }
            }
            if let Some(c) = &check {
                entries.retain(|e| e.check == c);
            }
            let reports = run_suite(&entries, max_degree);
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            if format == Format::Json {
                out.push_str(&json(&reports));
                out.push('\n');
            } else {
                for r in &reports {
                    out.push_str(&format!("{r}\n"));
                }
                let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
                let skipped = reports.len() - passed - failed;
                out.push_str(&format!("{passed} passed, {failed} failed, {skipped} skipped\n"));
            }
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
