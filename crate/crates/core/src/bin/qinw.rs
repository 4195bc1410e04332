use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qinw::epsbias::{audit_bias, BiasedSpaceParams};
use qinw::extractor::{ext_apply, ext_params_for, ext_seed_unpack, ExtParams};
use qinw::gf2m::FieldParams;
use qinw::harness::{
    bench, classical_fool_experiment, fool_experiment, fool_experiment_with_levels, level_experiment, BenchSuite,
    ClassicalProgram, FoolMode,
};
use qinw::inw::{cost_model, inw_coord, inw_expand, inw_params, inw_params_raw, InwParams, InwSeed, InwStream};
use qinw::qsim::{bp_run, bp_run_avg, qp_run, BranchingProgram, CoinSource, DensityMatrix, ProgramFile};
use qinw::{BitString, Error, Result};

#[derive(Parser)]
#[command(name = "qinw", version, about = "INW generator, small-bias spaces and quantum branching program simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field arithmetic on hex-encoded elements.
    Gf {
        #[arg(value_enum)]
        op: GfOp,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        /// Exponent for `pow`.
        #[arg(long)]
        k: Option<u64>,
    },
    #[command(subcommand)]
    /// Small-bias space audits.
    Bias(BiasCmd),
    #[command(subcommand)]
    /// The XOR extractor.
    Ext(ExtCmd),
    #[command(subcommand)]
    /// Generator parameters, output and costs.
    Prg(PrgCmd),
    #[command(subcommand)]
    /// Density-matrix simulation of a program file.
    Sim(SimCmd),
    #[command(subcommand)]
    /// Distance between uniform and generator coins on a program.
    Fool(FoolCmd),
    /// Timing ladder for one suite.
    Bench {
        suite: String,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GfOp {
    Add,
    Mul,
    Pow,
}

#[derive(Subcommand)]
enum BiasCmd {
    /// Exhaustive bias over all nonempty subsets and all seeds.
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        delta: f64,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    /// Ext(x, seed) on hex input.
    Apply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        seed_hex: String,
        #[arg(long)]
        input_hex: String,
    },
    /// Smallest admissible field for (n, t, eps).
    Params {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        eps: f64,
    },
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Space bound.
    #[arg(long = "S", default_value_t = 2)]
    space: usize,
    /// Output length.
    #[arg(long = "T")]
    output_len: Option<usize>,
    /// Target error.
    #[arg(long)]
    eps: Option<f64>,
    /// Block length, bypassing the admissibility check.
    #[arg(long = "raw-N", requires = "raw_depth")]
    raw_block: Option<usize>,
    /// Tree depth for raw parameters.
    #[arg(long = "raw-M")]
    raw_depth: Option<usize>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<InwParams> {
        match (self.raw_block, self.raw_depth) {
            (Some(n), Some(m)) => {
                let p = inw_params_raw(n, m, self.space)?;
                match self.output_len {
                    Some(t) => p.with_output_len(t),
                    None => Ok(p),
                }
            }
            _ => {
                let t = self.output_len.ok_or_else(|| missing("--T"))?;
                let eps = self.eps.ok_or_else(|| missing("--eps"))?;
                inw_params(self.space, t, eps)
            }
        }
    }
}

fn missing(flag: &str) -> Error {
    Error::InvalidParameter(format!("{flag} is required unless --raw-N and --raw-M are given"))
}

#[derive(Clone, Copy, ValueEnum)]
enum BitFormat {
    Hex,
    Bits,
}

#[derive(Subcommand)]
enum PrgCmd {
    /// Full output by recursion.
    Expand {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        seed_hex: String,
        #[arg(long, value_enum, default_value = "bits")]
        format: BitFormat,
    },
    /// One output coordinate.
    Coord {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        seed_hex: String,
        #[arg(long)]
        j: usize,
    },
    /// Streams the output as 0/1 text into a file.
    Stream {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        seed_hex: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Symbolic space and operation counts for streaming.
    Cost {
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Subcommand)]
enum SimCmd {
    /// Runs a straight-line or branching program.
    Run {
        /// JSON program file.
        #[arg(long)]
        program: PathBuf,
        /// Coin string for a branching program, in read order.
        #[arg(long, conflicts_with = "uniform")]
        coins: Option<String>,
        /// Average a branching program over all coin strings (the default).
        #[arg(long)]
        uniform: bool,
        /// Writes the final state as CSV.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct ModeArgs {
    /// Sample this many seeds instead of enumerating all of them.
    #[arg(long)]
    sample: Option<usize>,
    /// Seed of the seed sampler.
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
}

impl ModeArgs {
    fn mode(&self) -> FoolMode {
        match self.sample {
            Some(n_seeds) => FoolMode::Sampled { n_seeds, rng_seed: self.rng_seed },
            None => FoolMode::Exhaustive,
        }
    }
}

#[derive(Subcommand)]
enum FoolCmd {
    /// Exact or sampled distance over the full program.
    Run {
        /// JSON program file.
        #[arg(long)]
        program: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        mode: ModeArgs,
        /// Also run the level experiments on prefixes of the program.
        #[arg(long)]
        levels: bool,
    },
    /// Compares a 2^i-coin program against the sub-generator G_i.
    Level {
        /// JSON program file.
        #[arg(long)]
        program: PathBuf,
        #[arg(long)]
        i: usize,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// A random width-w permutation program, or the parity program.
    Classical {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        gen_seed: Option<u64>,
        #[arg(long, conflicts_with = "gen_seed")]
        parity: bool,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            use std::io::Write;
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn load_branching(path: &PathBuf) -> Result<BranchingProgram> {
    match ProgramFile::load(path)? {
        ProgramFile::Branching(bp) => Ok(bp),
        ProgramFile::Quantum(_) => Err(Error::InvalidParameter("expected a branching program (\"steps\")".into())),
    }
}

fn run(command: Command) -> Result<Value> {
    match command {
        Command::Gf { op, m, a, b, k } => {
            let field = FieldParams::with_bits(m)?;
            let a = field.parse_hex(&a)?;
            let result = match op {
                GfOp::Pow => a.pow(k.ok_or_else(|| Error::InvalidParameter("pow needs --k".into()))?),
                GfOp::Add | GfOp::Mul => {
                    let b = field.parse_hex(b.as_deref().ok_or_else(|| Error::InvalidParameter("needs --b".into()))?)?;
                    if matches!(op, GfOp::Add) {
                        a.add(&b)?
                    } else {
                        a.mul(&b)?
                    }
                }
            };
            Ok(json!({ "m": m, "modulus": format!("{:x}", field.modulus()), "result": format!("{:x}", result.bits()) }))
        }
        Command::Bias(BiasCmd::Audit { n, m, delta }) => {
            let params = BiasedSpaceParams::new(n, FieldParams::with_bits(m)?)?;
            Ok(to_value(&audit_bias(&params, delta)?))
        }
        Command::Ext(ExtCmd::Apply { n, m, seed_hex, input_hex }) => {
            let field = FieldParams::with_bits(m)?;
            let params = ExtParams::new(n, field, 0, 1.0)?;
            let seed = ext_seed_unpack(&field, &BitString::from_hex(&seed_hex, 2 * m as usize)?)?;
            let x = BitString::from_hex(&input_hex, n)?;
            let y = ext_apply(&params, &x, &seed)?;
            Ok(json!({ "output_hex": y.to_hex(), "output_bits": y.to_bit_text() }))
        }
        Command::Ext(ExtCmd::Params { n, t, eps }) => {
            let p = ext_params_for(n, t, eps)?;
            Ok(json!({ "params": to_value(&p), "m": p.field.m(), "error_bound": p.error_bound() }))
        }
        Command::Prg(cmd) => prg(cmd),
        Command::Sim(SimCmd::Run { program, coins, uniform: _, dump }) => {
            let state = match ProgramFile::load(&program)? {
                ProgramFile::Quantum(qp) => {
                    if coins.is_some() {
                        return Err(Error::InvalidParameter("--coins applies to branching programs".into()));
                    }
                    qp_run(&qp, &DensityMatrix::new(qp.qubits)?)?
                }
                ProgramFile::Branching(bp) => {
                    let rho0 = DensityMatrix::new(bp.qubits)?;
                    match coins {
                        Some(text) => bp_run(&bp, &rho0, &BitString::parse_bits(&text)?)?,
                        None => bp_run_avg(&bp, &rho0, &CoinSource::Uniform)?,
                    }
                }
            };
            if let Some(path) = &dump {
                std::fs::write(path, state.to_csv())?;
            }
            let (p0, p1) = state.output_distribution();
            Ok(json!({ "qubits": state.qubits(), "p0": p0, "p1": p1, "diagonal": state.diagonal() }))
        }
        Command::Fool(cmd) => fool(cmd),
        Command::Bench { suite, trials } => Ok(to_value(&bench(suite.parse::<BenchSuite>()?, trials)?)),
    }
}

fn prg(cmd: PrgCmd) -> Result<Value> {
    match cmd {
        PrgCmd::Expand { params, seed_hex, format } => {
            let params = params.resolve()?;
            let seed = InwSeed::from_hex(&params, &seed_hex)?;
            let out = inw_expand(&params, &seed)?;
            let text = match format {
                BitFormat::Hex => out.to_hex(),
                BitFormat::Bits => out.to_bit_text(),
            };
            Ok(json!({ "seed_bits": params.seed_bits(), "output_len": out.len(), "output": text }))
        }
        PrgCmd::Coord { params, seed_hex, j } => {
            let params = params.resolve()?;
            let seed = InwSeed::from_hex(&params, &seed_hex)?;
            Ok(json!({ "j": j, "bit": u8::from(inw_coord(&params, &seed, j)?) }))
        }
        PrgCmd::Stream { params, seed_hex, out } => {
            use std::io::Write;
            let params = params.resolve()?;
            let seed = InwSeed::from_hex(&params, &seed_hex)?;
            let mut file = std::io::BufWriter::new(std::fs::File::create(&out)?);
            let mut stream = InwStream::new(&params, &seed);
            for bit in stream.by_ref() {
                file.write_all(if bit { b"1" } else { b"0" })?;
            }
            file.write_all(b"\n")?;
            file.flush()?;
            Ok(json!({ "bits_written": params.output_len, "ext_applications": stream.ext_applications(), "out": out }))
        }
        PrgCmd::Cost { params } => Ok(to_value(&cost_model(&params.resolve()?))),
    }
}

fn fool(cmd: FoolCmd) -> Result<Value> {
    match cmd {
        FoolCmd::Run { program, params, mode, levels } => {
            let bp = load_branching(&program)?;
            let params = params.resolve()?;
            let report = if levels {
                fool_experiment_with_levels(&bp, &params, mode.mode())?
            } else {
                fool_experiment(&bp, &params, mode.mode())?
            };
            Ok(to_value(&report))
        }
        FoolCmd::Level { program, i, params, mode } => {
            let bp = load_branching(&program)?;
            Ok(to_value(&level_experiment(&bp, &params.resolve()?, i, mode.mode())?))
        }
        FoolCmd::Classical { width, gen_seed, parity, params, mode } => {
            let params = params.resolve()?;
            let program = if parity {
                if width != 2 {
                    return Err(Error::InvalidParameter("the parity program has width 2".into()));
                }
                ClassicalProgram::parity(params.output_len)
            } else {
                ClassicalProgram::random(width, params.output_len, gen_seed.unwrap_or(0))?
            };
            let report = classical_fool_experiment(&program, &params, mode.mode())?;
            Ok(json!({ "program": to_value(&program), "report": to_value(&report) }))
        }
    }
}
