//! Command-line pipeline around the polyshadow library: build shadows from
//! divides and line arrangements, present complement groups, simplify them,
//! and compare invariants. Inputs and outputs are the JSON documents of
//! `polyshadow::io`; `-` means stdin or stdout. Errors leave as a JSON
//! object `{code, message, context}` on stderr with a nonzero exit.

use std::collections::BTreeSet;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use polyshadow::builders::{arrangement_to_divide, double_divide_with_layout};
use polyshadow::cutting::{auto_cut, CuttingSystem};
use polyshadow::group::{
    abelianization, count_homs, standard_probe_groups, tietze_simplify, FiniteGroupTable,
    Presentation,
};
use polyshadow::present::{check_theorem_41, present, present_reduced, wirtinger, Thm41Report};
use polyshadow::render::{render_svg, RenderOptions};
use polyshadow::shadow::{
    select_regions, SelectionPreset, SelectionWarning, ShadowedPolyhedron, SubSelection,
};
use polyshadow::{io as pio, Error, RegionId};

#[derive(Parser)]
#[command(
    name = "polyshadow",
    version,
    about = "Shadowed polyhedra on the disk: divides, arrangements, and complement group presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a shadow from a divide file by doubling its curve.
    #[command(name = "build-divide")]
    BuildDivide {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Over/under policy: "default" or "seed:N".
        #[arg(long, default_value = "default")]
        policy: String,
    },
    /// Build a shadow from a real line arrangement file.
    #[command(name = "build-arrangement")]
    BuildArrangement {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Present the fundamental group of the complement of a subpolyhedron.
    #[command(name = "present")]
    Present {
        input: PathBuf,
        /// Subpolyhedron: Yabc, Yac, Yasqc, or custom:FILE.
        #[arg(long)]
        sub: String,
        /// Cutting system: auto, seed:N, or a cutting file path.
        #[arg(long, default_value = "auto")]
        cutting: String,
        /// Use the reduced system of cutting trees.
        #[arg(long)]
        reduced: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Classical Wirtinger presentation of the diagram's link.
    #[command(name = "wirtinger")]
    Wirtinger {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Tietze-simplify a presentation.
    #[command(name = "simplify")]
    Simplify {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Simplification pass limit.
        #[arg(long, default_value_t = 64)]
        budget: usize,
    },
    /// Print abelian invariants and homomorphism counts as JSON.
    #[command(name = "invariants")]
    Invariants {
        input: PathBuf,
        /// Comma-separated probe groups (S3, S4, A4, D4, Zn).
        #[arg(long)]
        homs: Option<String>,
    },
    /// Compare the presented group with the Wirtinger presentation when
    /// gleams equal corner sums.
    #[command(name = "check-thm41")]
    CheckThm41 { input: PathBuf },
    /// Render the diagram as SVG.
    #[command(name = "render")]
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::FAILURE
        }
    }
}

struct CliError {
    code: String,
    message: String,
    context: serde_json::Value,
}

impl CliError {
    fn to_json(&self) -> String {
        json!({
            "code": self.code,
            "message": self.message,
            "context": self.context,
        })
        .to_string()
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        CliError {
            code: "Io".into(),
            message: err.to_string(),
            context: json!({ "path": path.display().to_string() }),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: "Usage".into(),
            message: message.into(),
            context: json!({}),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError {
            code: err.code().into(),
            message: err.to_string(),
            context: json!({ "detail": format!("{err:?}") }),
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::io(path, e))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
    }
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io(path, e))
    } else {
        std::fs::write(path, text).map_err(|e| CliError::io(path, e))
    }
}

fn load_shadow(
    path: &Path,
) -> Result<(ShadowedPolyhedron, Option<polyshadow::builders::Layout>), CliError> {
    Ok(pio::parse_shadow(&read_input(path)?)?)
}

fn parse_selection(shadow: &ShadowedPolyhedron, spec: &str) -> Result<SubSelection, CliError> {
    let preset = match spec {
        "Yabc" => SelectionPreset::Yabc,
        "Yac" => SelectionPreset::Yac,
        "Yasqc" => SelectionPreset::YaSquareC,
        custom => match custom.strip_prefix("custom:") {
            Some(file) => {
                let text = read_input(Path::new(file))?;
                let value: serde_json::Value = serde_json::from_str(&text)
                    .map_err(|e| CliError::from(Error::Schema(e.to_string())))?;
                let regions = value
                    .get("regions")
                    .and_then(|r| r.as_array())
                    .ok_or_else(|| {
                        CliError::from(Error::Schema(
                            "custom selection needs a \"regions\" array".into(),
                        ))
                    })?
                    .iter()
                    .map(|v| {
                        v.as_u64().map(|r| RegionId(r as u32)).ok_or_else(|| {
                            CliError::from(Error::Schema("region ids must be integers".into()))
                        })
                    })
                    .collect::<Result<BTreeSet<_>, _>>()?;
                SelectionPreset::Custom(regions)
            }
            None => {
                return Err(CliError::usage(format!(
                    "unknown subpolyhedron {spec}; expected Yabc, Yac, Yasqc or custom:FILE"
                )))
            }
        },
    };
    let (selection, warnings) = select_regions(shadow, &preset)?;
    for w in warnings {
        match w {
            SelectionWarning::OuterInCustomSelection => {
                eprintln!("warning: custom selection includes the outer region");
            }
        }
    }
    Ok(selection)
}

fn parse_cutting_spec(shadow: &ShadowedPolyhedron, spec: &str) -> Result<CuttingSystem, CliError> {
    if spec == "auto" {
        return Ok(auto_cut(shadow.map(), 0)?);
    }
    if let Some(seed) = spec.strip_prefix("seed:") {
        let seed: u64 = seed
            .parse()
            .map_err(|_| CliError::usage(format!("bad cutting seed in {spec}")))?;
        return Ok(auto_cut(shadow.map(), seed)?);
    }
    Ok(pio::parse_cutting(
        &read_input(Path::new(spec))?,
        shadow.map(),
    )?)
}

fn parse_policy(spec: &str) -> Result<Option<u64>, CliError> {
    match spec {
        "default" => Ok(None),
        other => match other.strip_prefix("seed:") {
            Some(seed) => seed
                .parse()
                .map(Some)
                .map_err(|_| CliError::usage(format!("bad policy seed in {spec}"))),
            None => Err(CliError::usage(format!(
                "unknown policy {spec}; expected default or seed:N"
            ))),
        },
    }
}

fn fingerprint_json(
    pres: &Presentation,
    groups: &[FiniteGroupTable],
) -> Result<serde_json::Value, CliError> {
    let abelian = abelianization(pres);
    let mut homs = Vec::new();
    for g in groups {
        homs.push(json!([g.name, count_homs(pres, g)?]));
    }
    Ok(json!({
        "abelian": {
            "rank": abelian.rank,
            "torsion": abelian.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        },
        "homs": homs,
    }))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::BuildDivide {
            input,
            output,
            policy,
        } => {
            let divide = pio::parse_divide(&read_input(&input)?)?;
            let (shadow, layout) = double_divide_with_layout(&divide)?;
            let shadow = match parse_policy(&policy)? {
                None => shadow,
                Some(seed) => {
                    let over = polyshadow::samples::random_over(shadow.map(), seed);
                    shadow.with_over(over)?
                }
            };
            write_output(&output, &pio::shadow_to_string(&shadow, Some(&layout)))
        }
        Command::BuildArrangement { input, output } => {
            let arrangement = pio::parse_arrangement(&read_input(&input)?)?;
            let divide = arrangement_to_divide(&arrangement)?;
            let (shadow, layout) = double_divide_with_layout(&divide)?;
            write_output(&output, &pio::shadow_to_string(&shadow, Some(&layout)))
        }
        Command::Present {
            input,
            sub,
            cutting,
            reduced,
            output,
        } => {
            let (shadow, _) = load_shadow(&input)?;
            let selection = parse_selection(&shadow, &sub)?;
            let cs = parse_cutting_spec(&shadow, &cutting)?;
            let presentation = if reduced {
                present_reduced(&shadow, &selection, &cs)?
            } else {
                present(&shadow, &selection, &cs)?
            };
            write_output(&output, &pio::presentation_to_string(&presentation))
        }
        Command::Wirtinger { input, output } => {
            let (shadow, _) = load_shadow(&input)?;
            let presentation = wirtinger(&shadow.diagram)?;
            write_output(&output, &pio::presentation_to_string(&presentation))
        }
        Command::Simplify {
            input,
            output,
            budget,
        } => {
            let presentation = pio::parse_presentation(&read_input(&input)?)?;
            let simplified = tietze_simplify(&presentation, budget);
            write_output(&output, &pio::presentation_to_string(&simplified))
        }
        Command::Invariants { input, homs } => {
            let presentation = pio::parse_presentation(&read_input(&input)?)?;
            let groups = match homs {
                None => standard_probe_groups(),
                Some(spec) => spec
                    .split(',')
                    .map(|name| {
                        FiniteGroupTable::by_name(name.trim())
                            .ok_or_else(|| CliError::usage(format!("unknown probe group {name}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let value = fingerprint_json(&presentation, &groups)?;
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
            Ok(())
        }
        Command::CheckThm41 { input } => {
            let (shadow, _) = load_shadow(&input)?;
            let cs = auto_cut(shadow.map(), 0)?;
            let word = match check_theorem_41(&shadow, &cs)? {
                Thm41Report::Match { .. } => "match",
                Thm41Report::Mismatch { .. } => "mismatch",
                Thm41Report::NotApplicable { .. } => "not-applicable",
            };
            println!("{word}");
            Ok(())
        }
        Command::Render { input, output } => {
            let (shadow, layout) = load_shadow(&input)?;
            let svg = render_svg(&shadow, layout.as_ref(), &RenderOptions::default());
            write_output(&output, &svg)
        }
    }
}
