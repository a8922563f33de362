use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pauli_lie::genfile::{parse_generator_file, write_generator_file, GeneratorFile};
use pauli_lie::oracle::{lie_closure, DEFAULT_CAP};
use pauli_lie::sweep::{oracle_sweep, SweepConfig};
use pauli_lie::{
    canonical_generators, classify, extension_suggestions, report, CanonicalForm, CanonicalShape, Error, Exec, Family,
    Style,
};

#[derive(Parser)]
#[command(name = "pauli-lie", version, about = "Classify Lie algebras generated by Pauli strings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a generator file ("-" reads standard input).
    Classify {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        /// Write the contraction log to this path.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Brute-force Lie closure of a generator file.
    Closure {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Print the members, sorted, in dense form.
        #[arg(long)]
        list: bool,
        /// Exit with status 4 when the cap is hit.
        #[arg(long)]
        strict: bool,
    },
    /// Emit the canonical generator set of a family.
    Canonical {
        #[arg(long)]
        family: Family,
        #[arg(long = "nL", default_value_t = 0)]
        n_l: usize,
        #[arg(long = "n2", default_value_t = 0)]
        n_2: usize,
        #[arg(long = "nc", default_value_t = 0)]
        n_c: usize,
        #[arg(long)]
        dependent: bool,
        #[arg(long)]
        dense: bool,
    },
    /// Generators that would promote a single-component algebra.
    Suggest { input: PathBuf },
    /// Compare the classifier with the closure oracle on random sets.
    Selftest {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = SweepConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_qubits: usize,
        #[arg(long, default_value_t = 8)]
        max_generators: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_defect() { 3 } else { 2 }, message: e.to_string() }
    }
}

fn read_input(path: &Path) -> Result<GeneratorFile, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::input(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    parse_generator_file(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let io_err = |e: io::Error| Failure::input(e);
    match cli.command {
        Command::Classify { input, json, trace } => {
            let file = read_input(&input)?;
            let c = classify(&file.generators)?;
            if let Some(path) = trace {
                fs::write(&path, report::trace_text(&c)).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            }
            let text = if json { report::to_json_string(&c) } else { report::to_text(&c) };
            out.write_all(text.as_bytes()).map_err(io_err)?;
        }
        Command::Closure { input, cap, list, strict } => {
            let file = read_input(&input)?;
            let set = lie_closure(&file.generators, cap)?;
            if list {
                let mut members: Vec<String> = set.members().iter().map(|p| p.to_text(Style::Dense)).collect();
                members.sort();
                for m in members {
                    writeln!(out, "{m}").map_err(io_err)?;
                }
            }
            if set.cap_hit {
                writeln!(out, "CAP_EXCEEDED").map_err(io_err)?;
                if strict {
                    return Err(Failure { code: 4, message: format!("closure exceeded cap {cap}") });
                }
            } else {
                writeln!(out, "dim {}", set.len()).map_err(io_err)?;
            }
        }
        Command::Canonical { family, n_l, n_2, n_c, dependent, dense } => {
            let shape = CanonicalShape { family, n_l, n_2, n_c };
            let gens = canonical_generators(&CanonicalForm::new(shape, dependent))?;
            let style = if dense { Style::Dense } else { Style::Sparse };
            out.write_all(write_generator_file(&gens, style, false).as_bytes()).map_err(io_err)?;
        }
        Command::Suggest { input } => {
            let file = read_input(&input)?;
            let c = classify(&file.generators)?;
            for s in extension_suggestions(&c)? {
                writeln!(out, "{} -> {} {}", s.pauli.to_text(Style::Sparse), s.form, s.algebra).map_err(io_err)?;
            }
        }
        Command::Selftest { count, seed, max_qubits, max_generators } => {
            if max_qubits == 0 || max_generators == 0 {
                return Err(Failure::input("--max-qubits and --max-generators must be positive"));
            }
            let cfg = SweepConfig { seed, count, max_qubits, max_generators };
            let outcomes = oracle_sweep(&cfg, Exec::default());
            let bad: Vec<_> = outcomes.iter().filter(|o| !o.agrees()).collect();
            for o in &bad {
                let gens: Vec<String> = o.paulis.iter().map(|p| p.to_text(Style::Dense)).collect();
                writeln!(out, "mismatch #{}: [{}] classifier {:?} oracle {:?}", o.index, gens.join(", "), o.classified, o.oracle)
                    .map_err(io_err)?;
            }
            writeln!(out, "selftest seed {seed}: {}/{} agree", outcomes.len() - bad.len(), outcomes.len()).map_err(io_err)?;
            if !bad.is_empty() {
                return Err(Failure { code: 3, message: format!("{} mismatches", bad.len()) });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden(name: &str) -> String {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name).to_string_lossy().into_owned()
    }

    fn exec(args: &[&str]) -> (u8, String) {
        let cli = Cli::try_parse_from(std::iter::once("pauli-lie").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = match run(cli, &mut buf) {
            Ok(()) => 0,
            Err(f) => f.code,
        };
        (code, String::from_utf8(buf).unwrap())
    }

    fn temp_file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn golden_json_is_byte_stable() {
        let mut checked = 0;
        for entry in fs::read_dir(golden("")).unwrap() {
            let path = entry.unwrap().path();
            if path.extension().is_some_and(|e| e == "txt") {
                let (code, out) = exec(&["classify", "--json", path.to_str().unwrap()]);
                assert_eq!(code, 0, "{}", path.display());
                assert_eq!(out, fs::read_to_string(path.with_extension("json")).unwrap(), "{}", path.display());
                checked += 1;
            }
        }
        assert!(checked >= 8);
    }

    #[test]
    fn classify_reports() {
        let f = temp_file("X\nZ\n");
        let (code, text) = exec(&["classify", f.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(text.contains("so(3) (dim 3)") && text.contains("universal: yes"), "{text}");
        let (_, text) = exec(&["classify", &golden("two_components.txt")]);
        assert!(text.contains("components: 2"));
    }

    #[test]
    fn exit_codes() {
        let identity = temp_file("X\nI\n");
        assert_eq!(exec(&["classify", identity.path().to_str().unwrap()]).0, 2);
        let bad = temp_file("X0\nZ0 Q1\n");
        let cli = Cli::try_parse_from(["pauli-lie", "classify", bad.path().to_str().unwrap()]).unwrap();
        let err = run(cli, &mut Vec::new()).err().unwrap();
        assert_eq!(err.code, 2);
        assert!(err.message.contains("line 2, column 4"), "{}", err.message);
        assert_eq!(exec(&["classify", "/nonexistent/file"]).0, 2);
        assert_eq!(exec(&["canonical", "--family", "B1", "--n2", "2", "--dependent"]).0, 2);
        assert_eq!(exec(&["canonical", "--family", "A", "--nL", "4", "--dependent"]).0, 2);
        assert!(Cli::try_parse_from(["pauli-lie", "canonical", "--family", "C"]).is_err());
        let defect: Failure = Error::Defect("x".into()).into();
        assert_eq!(defect.code, 3);
    }

    #[test]
    fn closure_listing_and_cap() {
        let f = temp_file("X\nZ\n");
        assert_eq!(exec(&["closure", "--list", f.path().to_str().unwrap()]), (0, "X\nY\nZ\ndim 3\n".into()));
        assert_eq!(exec(&["closure", &golden("b1.txt")]), (0, "dim 10\n".into()));
        assert_eq!(exec(&["closure", "--cap", "20", &golden("b3d_control.txt")]), (0, "CAP_EXCEEDED\n".into()));
        assert_eq!(exec(&["closure", "--cap", "20", "--strict", &golden("b3d_control.txt")]).0, 4);
    }

    #[test]
    fn canonical_output() {
        assert_eq!(exec(&["canonical", "--family", "A", "--nL", "4"]).1, "Z0\nX0\nZ0 X1\nZ1\n");
        assert_eq!(exec(&["canonical", "--family", "B1", "--n2", "2"]).1.lines().count(), 6);
        assert_eq!(exec(&["canonical", "--family", "A", "--nL", "2", "--dense"]).1, "Z\nX\n");
    }

    #[test]
    fn trace_is_written() {
        let dir = tempfile::tempdir().unwrap();
        let trace = dir.path().join("trace.txt");
        let (code, _) = exec(&["classify", "--trace", trace.to_str().unwrap(), &golden("majorana2.txt")]);
        assert_eq!(code, 0);
        let text = fs::read_to_string(&trace).unwrap();
        assert!(!text.is_empty());
        for l in text.lines() {
            let parts: Vec<&str> = l.split(' ').collect();
            assert_eq!(parts[0], "CONTRACT");
            assert!(parts[1].parse::<usize>().is_ok() && parts[2].parse::<usize>().is_ok());
            assert!(parts[3] == "+1" || parts[3] == "-1");
        }
    }

    #[test]
    fn suggestions_and_selftest() {
        let f = temp_file("Z0\nX0\nZ0 X1\nZ1\n");
        assert!(exec(&["suggest", f.path().to_str().unwrap()]).1.contains("A_D"));
        let (code, text) = exec(&["selftest", "--count", "40", "--seed", "3"]);
        assert_eq!(code, 0);
        assert!(text.contains("40/40 agree"));
    }
}
