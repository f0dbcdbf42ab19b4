//! Command-line front-end: character tables, sector assembly, curve
//! formulas, the projective-line oracle and the acceptance suites.
//!
//! Exit codes: 0 success, 2 malformed input, 3 invalid datum, 4 computation
//! mismatch, 5 size cap exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use equichar::charfun::{character_table, CharacterTable, ClassFunction};
use equichar::curve::curve_euler_char;
use equichar::cyclo::rational::int;
use equichar::groups::PermGroup;
use equichar::json::{
    self, ClassFunctionJson, CurveDatumJson, DecompositionJson, GroupJson, ReportJson, SectorDataJson, TableJson,
};
use equichar::lrr::assemble_sectors;
use equichar::oracle::{cohomology_character, compare, MatrixGroup, MatrixGroupSpec};
use equichar::verify::{reassembly_trials, run_all};
use equichar::{limits, Error};

#[derive(Parser, Debug)]
#[command(
    name = "equichar",
    version,
    about = "Exact equivariant Euler characteristics as virtual characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conjugacy classes, cyclic subgroup classes and (optionally) the
    /// irreducible characters of a group.
    Table {
        #[arg(long)]
        group: PathBuf,
        /// Characteristic, overriding the file's "char".
        #[arg(long = "char")]
        characteristic: Option<u32>,
        #[arg(long)]
        irreducibles: bool,
        #[arg(long)]
        json: bool,
    },
    /// Checks that sector decomposition followed by assembly returns
    /// random virtual characters unchanged.
    ReassembleCheck {
        #[arg(long)]
        group: PathBuf,
        #[arg(long = "char")]
        characteristic: Option<u32>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Assembles sector data into a virtual character.
    Assemble {
        #[arg(long)]
        sectors: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluates the curve formula on a datum.
    CurveChi {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        decompose: bool,
        #[arg(long)]
        json: bool,
    },
    /// Equivariant cohomology of O(d) on the projective line.
    OracleP1 {
        /// "cyclic(n)" or "dihedral(n)" with n odd.
        #[arg(long)]
        spec: String,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        /// Compare with the curve formula and print the full report.
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        json: bool,
    },
    /// Runs every acceptance suite.
    VerifyAll,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::Mismatch(_) => 4,
            e if e.is_cap() => 5,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn mismatch(message: impl Into<String>) -> Failure {
    Failure {
        code: 4,
        message: message.into(),
    }
}

type CliResult = std::result::Result<(), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> std::result::Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(json::from_str(&text)?)
}

fn load_group(path: &Path, characteristic: Option<u32>) -> std::result::Result<Arc<PermGroup>, Failure> {
    let mut spec: GroupJson = read_json(path)?;
    if let Some(p) = characteristic {
        spec.characteristic = p;
    }
    Ok(spec.build()?)
}

fn optional_table(group: &Arc<PermGroup>) -> std::result::Result<Option<CharacterTable>, Failure> {
    if group.characteristic() != 0 {
        return Ok(None);
    }
    match character_table(group) {
        Ok(t) => Ok(Some(t)),
        Err(Error::TableUnavailable(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// A short description of a virtual character: named when it is the
/// trivial or zero character, otherwise its irreducible multiplicities.
fn describe(f: &ClassFunction, table: Option<&CharacterTable>) -> std::result::Result<String, Failure> {
    let trivial = ClassFunction::trivial(f.group().clone());
    if *f == trivial {
        return Ok("trivial character".into());
    }
    if f.is_zero() {
        return Ok("zero".into());
    }
    if *f == -&trivial {
        return Ok("minus the trivial character".into());
    }
    let Some(table) = table else {
        return Ok("virtual character".into());
    };
    let d = table.decompose(f)?;
    let terms: Vec<String> = d
        .multiplicities
        .iter()
        .enumerate()
        .filter(|(_, m)| **m != int(0))
        .map(|(i, m)| format!("{m}·χ{i}"))
        .collect();
    let kind = if d.integral {
        "virtual character"
    } else {
        "non-integral class function"
    };
    Ok(format!("{kind} {}", terms.join(" + ")))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", json::to_string_pretty(value));
}

fn cmd_table(group: &Path, characteristic: Option<u32>, irreducibles: bool, as_json: bool) -> CliResult {
    let g = load_group(group, characteristic)?;
    let table = if irreducibles {
        if g.characteristic() != 0 {
            return Err(
                Error::TableUnavailable("character tables are computed in characteristic 0 only".into()).into(),
            );
        }
        Some(character_table(&g)?)
    } else {
        None
    };
    if as_json {
        print_json(&TableJson::new(&g, table.as_ref()));
        return Ok(());
    }
    println!("order {} (characteristic {})", g.order(), g.characteristic());
    println!("classes:");
    for (k, c) in g.conjugacy_classes(true).iter().enumerate() {
        println!(
            "  C{k}: representative {} size {} order {}",
            c.representative_perm, c.size, c.order
        );
    }
    println!("cyclic subgroup classes:");
    for s in g.cyclic_subgroup_classes() {
        println!(
            "  σ{}: ⟨{}⟩ order {} centralizer {} normalizer {}",
            s.id, s.generator_perm, s.order, s.centralizer_order, s.normalizer_order
        );
    }
    if let Some(t) = table {
        println!("irreducible characters:");
        for (i, row) in t.rows().iter().enumerate() {
            println!("  χ{i}: {row}");
        }
    }
    Ok(())
}

fn cmd_reassemble_check(group: &Path, characteristic: Option<u32>, trials: usize, seed: u64) -> CliResult {
    let g = load_group(group, characteristic)?;
    let ok = reassembly_trials(&g, trials, seed)?;
    println!("{ok}/{trials} identity");
    if ok == trials {
        Ok(())
    } else {
        Err(mismatch(format!(
            "{} of {trials} characters did not reassemble",
            trials - ok
        )))
    }
}

fn cmd_assemble(sectors: &Path, as_json: bool) -> CliResult {
    let doc: SectorDataJson = read_json(sectors)?;
    let data = doc.build()?;
    let chi = assemble_sectors(&data)?;
    if as_json {
        print_json(&ClassFunctionJson::from_class_function(&chi));
        return Ok(());
    }
    let table = optional_table(data.group())?;
    println!("{chi}");
    println!("{}", describe(&chi, table.as_ref())?);
    Ok(())
}

fn cmd_curve_chi(datum: &Path, decompose: bool, as_json: bool) -> CliResult {
    let doc: CurveDatumJson = read_json(datum)?;
    let datum = doc.build()?;
    let chi = curve_euler_char(&datum)?;
    let table = if decompose {
        optional_table(datum.group())?
    } else {
        None
    };
    if as_json {
        print_json(&ClassFunctionJson::from_class_function(&chi));
        if let Some(t) = &table {
            print_json(&DecompositionJson::from_decomposition(&t.decompose(&chi)?));
        }
        return Ok(());
    }
    println!("{chi}");
    println!("{}", describe(&chi, table.as_ref())?);
    if decompose {
        match &table {
            Some(t) => {
                let d = t.decompose(&chi)?;
                let ms: Vec<String> = d.multiplicities.iter().map(ToString::to_string).collect();
                println!(
                    "multiplicities: [{}] ({})",
                    ms.join(", "),
                    if d.integral { "integral" } else { "non-integral" }
                );
            }
            None => println!("multiplicities: no character table available"),
        }
    }
    Ok(())
}

fn cmd_oracle(spec: &str, degree: i64, with_compare: bool, as_json: bool) -> CliResult {
    let spec: MatrixGroupSpec = spec.parse()?;
    let g = MatrixGroup::build(spec)?;
    if !with_compare {
        let chi = cohomology_character(&g, degree)?;
        if as_json {
            print_json(&ClassFunctionJson::from_class_function(&chi));
        } else {
            println!("{chi}");
        }
        return Ok(());
    }
    let report = compare(&g, degree)?;
    if as_json {
        print_json(&ReportJson::from_report(&report));
    } else {
        let table = optional_table(g.abstract_group())?;
        println!("{}", if report.equal { "EQUAL" } else { "MISMATCH" });
        println!(
            "cohomology: {} ({})",
            report.lhs,
            describe(&report.lhs, table.as_ref())?
        );
        println!(
            "formula:    {} ({})",
            report.rhs,
            describe(&report.rhs, table.as_ref())?
        );
        println!("difference: {}", report.diff);
        println!(
            "sector route: {}",
            if report.sector_route_equal {
                "equal"
            } else {
                "DIFFERENT"
            }
        );
        println!(
            "orbit checks: {}",
            if report.orbit_checks && report.bookkeeping {
                "ok"
            } else {
                "FAILED"
            }
        );
        println!("Riemann–Roch: {}", if report.hrr_equal { "ok" } else { "FAILED" });
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(mismatch(format!(
            "{} d = {degree}: formula and cohomology disagree",
            report.spec
        )))
    }
}

fn cmd_verify_all() -> CliResult {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} criteria passed", outcomes.len());
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(mismatch("some acceptance criteria failed"))
    }
}

fn apply_env_caps() -> CliResult {
    if let Ok(v) = std::env::var("EQUICHAR_MAX_GROUP") {
        let cap = v.parse::<usize>().map_err(|_| Failure {
            code: 2,
            message: format!("EQUICHAR_MAX_GROUP must be an integer, got {v:?}"),
        })?;
        limits::set_max_group_order(cap);
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    apply_env_caps()?;
    match cli.command {
        Command::Table {
            group,
            characteristic,
            irreducibles,
            json,
        } => cmd_table(&group, characteristic, irreducibles, json),
        Command::ReassembleCheck {
            group,
            characteristic,
            trials,
            seed,
        } => cmd_reassemble_check(&group, characteristic, trials, seed),
        Command::Assemble { sectors, json } => cmd_assemble(&sectors, json),
        Command::CurveChi { datum, decompose, json } => cmd_curve_chi(&datum, decompose, json),
        Command::OracleP1 {
            spec,
            degree,
            compare,
            json,
        } => cmd_oracle(&spec, degree, compare, json),
        Command::VerifyAll => cmd_verify_all(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
