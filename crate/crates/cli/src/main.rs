use std::collections::HashSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use charsheaf::classify::{
    all_character_sheaves, all_orbital_complexes, character_sheaves, cuspidal_sheaves,
    fourier_forward, fourier_inverse, induction_datum_for_sheaf, levi_for_nilpotent_support,
    orbital_complexes, CharacterSheafLabel,
};
use charsheaf::orbits::{enumerate_orbits, PairContext, SignedYoungDiagram};
use charsheaf::records::{
    parse_json_lines, to_csv, to_json_lines, to_pretty, ComplexRecord, LeviRecord, OrbitRecord,
    Record, SheafRecord, StratumRecord,
};
use charsheaf::strata::cs_orbits;
use charsheaf::{verify, Error};

/// Nilpotent orbits, strata and character sheaves for (SL_n, S(GL_p × GL_q)).
#[derive(Parser)]
#[command(name = "charsheaf", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    q: u32,
}

impl Pair {
    fn context(&self) -> Result<PairContext, Error> {
        PairContext::new(self.p, self.q)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Nilpotent K-orbits as signed Young diagrams.
    Orbits {
        #[command(flatten)]
        pair: Pair,
    },
    /// Strata supporting character sheaves, with their π₁ data.
    Strata {
        #[command(flatten)]
        pair: Pair,
    },
    /// Orbital complexes, optionally for one central order.
    Complexes {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Character sheaves, optionally for one central order.
    Classify {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Cuspidal character sheaves.
    Cuspidal {
        #[command(flatten)]
        pair: Pair,
    },
    /// Apply the Fourier bijection to one JSON record.
    Fourier {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum)]
        direction: Direction,
        /// An orbital-complex record (forward) or a sheaf record (inverse).
        #[arg(long)]
        record: String,
    },
    /// Levi datum for a Richardson diagram and odd m, or for a sheaf record.
    Levi {
        #[arg(long, requires = "m", conflicts_with_all = ["p", "q", "record"])]
        diagram: Option<String>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, requires_all = ["q", "record"])]
        p: Option<u32>,
        #[arg(long, requires_all = ["p", "record"])]
        q: Option<u32>,
        /// A sheaf record.
        #[arg(long)]
        record: Option<String>,
    },
    /// Run every consistency check over p + q ≤ n-max.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
}

enum Failure {
    Usage(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn render<R: Record>(records: &[R], format: Format) -> String {
    match format {
        Format::Json => to_json_lines(records),
        Format::Csv => to_csv(records),
        Format::Pretty => to_pretty(records),
    }
}

fn sheaf_records(ctx: PairContext, sheaves: &[CharacterSheafLabel]) -> Vec<SheafRecord> {
    let cusp: HashSet<_> = cuspidal_sheaves(ctx).into_iter().collect();
    sheaves
        .iter()
        .map(|s| SheafRecord::new(s, cusp.contains(s)))
        .collect()
}

fn one_record<R: Record>(text: &str) -> Result<R, Error> {
    let mut records = parse_json_lines::<R>(text)?;
    if records.len() != 1 {
        return Err(Error::InvalidRecord(format!(
            "expected one {} record, got {}",
            R::KIND,
            records.len()
        )));
    }
    Ok(records.remove(0))
}

fn checked_sheaf(text: &str, ctx: PairContext) -> Result<CharacterSheafLabel, Error> {
    let record: SheafRecord = one_record(text)?;
    let label = record.label()?;
    label.validate(ctx)?;
    let cuspidal = cuspidal_sheaves(ctx).contains(&label);
    if cuspidal != record.cuspidal {
        return Err(Error::InvalidRecord(format!(
            "cuspidal flag should be {cuspidal}"
        )));
    }
    Ok(label)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    let out = match cli.command {
        Command::Orbits { pair } => {
            let ctx = pair.context()?;
            let records = enumerate_orbits(ctx)
                .iter()
                .map(|o| OrbitRecord::new(o, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            render(&records, format)
        }
        Command::Strata { pair } => {
            let ctx = pair.context()?;
            render(
                &cs_orbits(ctx)
                    .iter()
                    .map(StratumRecord::new)
                    .collect::<Vec<_>>(),
                format,
            )
        }
        Command::Complexes { pair, m } => {
            let ctx = pair.context()?;
            let complexes = match m {
                Some(m) => orbital_complexes(ctx, m),
                None => all_orbital_complexes(ctx),
            };
            render(
                &complexes.iter().map(ComplexRecord::new).collect::<Vec<_>>(),
                format,
            )
        }
        Command::Classify { pair, m } => {
            let ctx = pair.context()?;
            let sheaves = match m {
                Some(m) => character_sheaves(ctx, m),
                None => all_character_sheaves(ctx),
            };
            render(&sheaf_records(ctx, &sheaves), format)
        }
        Command::Cuspidal { pair } => {
            let ctx = pair.context()?;
            render(&sheaf_records(ctx, &cuspidal_sheaves(ctx)), format)
        }
        Command::Fourier {
            pair,
            direction,
            record,
        } => {
            let ctx = pair.context()?;
            match direction {
                Direction::Forward => {
                    let complex = one_record::<ComplexRecord>(&record)?.complex()?;
                    ctx.check_signature(complex.orbit())?;
                    render(&sheaf_records(ctx, &[fourier_forward(&complex)]), format)
                }
                Direction::Inverse => {
                    let label = checked_sheaf(&record, ctx)?;
                    render(
                        &[ComplexRecord::new(&fourier_inverse(&label, ctx)?)],
                        format,
                    )
                }
            }
        }
        Command::Levi {
            diagram,
            m,
            p,
            q,
            record,
        } => {
            let record = match (diagram, m, p, q, record) {
                (Some(d), Some(m), None, None, None) => {
                    let lambda: SignedYoungDiagram = d.parse()?;
                    LeviRecord::new(&levi_for_nilpotent_support(&lambda, m)?)
                }
                (None, None, Some(p), Some(q), Some(r)) => {
                    let ctx = PairContext::new(p, q)?;
                    let label = checked_sheaf(&r, ctx)?;
                    LeviRecord::from_induction(&induction_datum_for_sheaf(&label, ctx)?)
                }
                _ => {
                    return Err(Failure::Usage(Error::InvalidRecord(
                        "levi takes either --diagram and --m, or --p, --q and --record".into(),
                    )))
                }
            };
            render(&[record], format)
        }
        Command::Verify { n_max } => {
            let report = verify::run_all(n_max)?;
            let text = render(&report, format);
            if report.iter().all(|r| r.passed) {
                text
            } else {
                print!("{text}");
                return Err(Failure::Verification);
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
