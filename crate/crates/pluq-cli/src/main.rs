//! `pluq`: PLUQ decompositions, rank profiles and derived forms over GF(p)
//! from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification or claimed property
//! fails, 2 on input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pluq::{
    arithmetic_cost, bruhat, check_table_row, column_echelon, generic_profile_check,
    leading_echelon, leu, pluq_crout_lex, pluq_iterative, pluq_left_looking_product,
    pluq_right_looking_product, pluq_tile_recursive, random_matrix, random_rank_matrix,
    row_echelon, strategy_table, DenseMatrix, PermStrategy, PluqFactors, PrimeField,
    SearchOrder, SplitMix64, SubPermutationMatrix,
};

/// Error wrapper that maps to exit code 1 instead of 2.
#[derive(Debug)]
struct VerificationFailure(String);

impl std::fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for VerificationFailure {}

#[derive(Parser)]
#[command(name = "pluq", version, about = "Exact PLUQ decompositions and rank profiles over GF(p)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchArg {
    Row,
    Col,
    Lex,
    Revlex,
    Product,
}

impl From<SearchArg> for SearchOrder {
    fn from(s: SearchArg) -> Self {
        match s {
            SearchArg::Row => SearchOrder::RowOrder,
            SearchArg::Col => SearchOrder::ColOrder,
            SearchArg::Lex => SearchOrder::Lex,
            SearchArg::Revlex => SearchOrder::RevLex,
            SearchArg::Product => SearchOrder::Product,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PermArg {
    Trans,
    Rot,
}

impl From<PermArg> for PermStrategy {
    fn from(p: PermArg) -> Self {
        match p {
            PermArg::Trans => PermStrategy::Transposition,
            PermArg::Rot => PermStrategy::Rotation,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Iter,
    Crout,
    Left,
    Right,
    Recursive,
}

#[derive(Args)]
struct StrategyArgs {
    /// Elimination engine
    #[arg(long, value_enum, default_value = "crout")]
    algo: AlgoArg,
    /// Pivot search order (iter engine)
    #[arg(long, value_enum, default_value = "lex")]
    search: SearchArg,
    /// Row permutation strategy (iter engine)
    #[arg(long, value_enum, default_value = "rot")]
    row_perm: PermArg,
    /// Column permutation strategy (iter engine)
    #[arg(long, value_enum, default_value = "rot")]
    col_perm: PermArg,
    /// Base-case cutoff (recursive engine)
    #[arg(long, default_value_t = 64)]
    threshold: usize,
}

impl StrategyArgs {
    fn run(&self, a: &DenseMatrix) -> Result<PluqFactors> {
        let fac = match self.algo {
            AlgoArg::Iter => pluq_iterative(
                a,
                self.search.into(),
                self.row_perm.into(),
                self.col_perm.into(),
            )?,
            AlgoArg::Crout => pluq_crout_lex(a)?,
            AlgoArg::Left => pluq_left_looking_product(a)?,
            AlgoArg::Right => pluq_right_looking_product(a)?,
            AlgoArg::Recursive => pluq_tile_recursive(a, self.threshold)?,
        };
        Ok(fac)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the rank profile matrix pivots of a matrix file
    Rpm {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
    /// Factor a matrix and report rank and modular reduction count
    Pluq {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
        /// Write X.P.perm, X.L.mat, X.U.mat, X.Q.perm
        #[arg(long)]
        out_prefix: Option<String>,
    },
    /// Print an echelon form (column echelon by default)
    Echelon {
        #[arg(long = "in")]
        input: PathBuf,
        /// Row echelon instead of column echelon
        #[arg(long)]
        rows: bool,
        /// Echelon form of the leading i x j sub-matrix (column kind only)
        #[arg(long, number_of_values = 2, value_names = ["I", "J"])]
        leading: Option<Vec<usize>>,
    },
    /// Print the LEU decomposition
    Leu {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the Bruhat decomposition
    Bruhat {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Report rank profile genericity of a matrix
    Generic {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check every pivoting-strategy table row on random matrices
    VerifyTable {
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 131063)]
        p: u64,
        #[arg(long, default_value_t = 12)]
        max_dim: usize,
    },
    /// Generate a random matrix (optionally of prescribed rank)
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Target rank; omitted means uniform entries
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 131063)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time an engine on seeded random instances and report the cost model
    Bench {
        #[arg(long)]
        n: usize,
        /// Rows (defaults to n)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 131063)]
        p: u64,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long, default_value_t = 3)]
        reps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.downcast_ref::<VerificationFailure>().is_some() {
                1
            } else {
                2
            };
            std::process::exit(code);
        }
    }
}

fn read_matrix(path: &PathBuf) -> Result<DenseMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    pluq::parse_matrix(&text).with_context(|| format!("parsing {}", path.display()))
}

fn pivots_line(s: &SubPermutationMatrix) -> String {
    let mut out = format!("{} pivots:", s.rank());
    for &(i, j) in s.pivots() {
        write!(out, " ({i},{j})").expect("writing to string cannot fail");
    }
    out
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Rpm { input, strategy } => {
            let a = read_matrix(&input)?;
            let fac = strategy.run(&a)?;
            if !fac.strategy().reveals_rpm() {
                bail!("the chosen strategy does not reveal the rank profile matrix");
            }
            if !fac.verify(&a)? {
                bail!(VerificationFailure("reconstruction check failed".into()));
            }
            println!("{}", pivots_line(&fac.pivoting_matrix()));
        }
        Cmd::Pluq {
            input,
            strategy,
            out_prefix,
        } => {
            let a = read_matrix(&input)?;
            let fac = strategy.run(&a)?;
            if !fac.verify(&a)? {
                bail!(VerificationFailure("reconstruction check failed".into()));
            }
            println!(
                "rank {} of {}x{} over GF({})",
                fac.rank(),
                a.rows(),
                a.cols(),
                a.field().modulus()
            );
            println!("reductions {}", fac.reductions());
            if let Some(prefix) = out_prefix {
                fs::write(format!("{prefix}.P.perm"), pluq::write_permutation(fac.p()))?;
                fs::write(format!("{prefix}.L.mat"), pluq::write_matrix(fac.l()))?;
                fs::write(format!("{prefix}.U.mat"), pluq::write_matrix(fac.u()))?;
                fs::write(format!("{prefix}.Q.perm"), pluq::write_permutation(fac.q()))?;
            }
        }
        Cmd::Echelon {
            input,
            rows,
            leading,
        } => {
            let a = read_matrix(&input)?;
            let fac = pluq_crout_lex(&a)?;
            let ech = match (rows, leading) {
                (false, None) => column_echelon(&fac)?,
                (false, Some(ij)) => leading_echelon(&fac, ij[0], ij[1])?,
                (true, None) => row_echelon(&fac)?,
                (true, Some(_)) => bail!("--leading applies to the column echelon form only"),
            };
            if !ech.is_staircase() {
                bail!(VerificationFailure("staircase check failed".into()));
            }
            let mut line = String::from("pivots:");
            for &(i, j) in ech.pivots() {
                write!(line, " ({i},{j})")?;
            }
            println!("{line}");
            print!("{}", pluq::write_matrix(ech.matrix()));
        }
        Cmd::Leu { input } => {
            let a = read_matrix(&input)?;
            let fac = pluq_crout_lex(&a)?;
            let leu = leu(&fac)?;
            if leu.reconstruct()? != a {
                bail!(VerificationFailure("L E U does not reconstruct A".into()));
            }
            println!("E: {}", pivots_line(leu.e()));
            print!("L:\n{}", pluq::write_matrix(leu.l()));
            print!("U:\n{}", pluq::write_matrix(leu.u()));
        }
        Cmd::Bruhat { input } => {
            let a = read_matrix(&input)?;
            let b = bruhat(&a)?;
            if b.reconstruct()? != a {
                bail!(VerificationFailure("V R U does not reconstruct A".into()));
            }
            println!("R: {}", pivots_line(b.r()));
            print!("V:\n{}", pluq::write_matrix(b.v()));
            print!("U:\n{}", pluq::write_matrix(b.u()));
        }
        Cmd::Generic { input } => {
            let a = read_matrix(&input)?;
            let rep = generic_profile_check(&a)?;
            println!("rank {}", rep.rank);
            println!("generic row rank profile: {}", rep.generic_row);
            println!("generic column rank profile: {}", rep.generic_col);
            println!("generic rank profile: {}", rep.generic);
            if let Some(ok) = rep.revlex_q_identity {
                println!("revlex factorization needs no column permutation: {ok}");
                if !ok {
                    bail!(VerificationFailure(
                        "generic column profile cross-check failed".into()
                    ));
                }
            }
        }
        Cmd::VerifyTable {
            trials,
            seed,
            p,
            max_dim,
        } => {
            let field = PrimeField::new(p)?;
            let mut failures = 0u64;
            for row in strategy_table() {
                let mut rng = SplitMix64::new(seed);
                let mut bad = 0u64;
                for _ in 0..trials {
                    let m = 1 + rng.below(max_dim as u64) as usize;
                    let n = 1 + rng.below(max_dim as u64 + 2) as usize;
                    let a = sparse_random(m, n, field, &mut rng);
                    if !check_table_row(&a, &row)?.is_empty() {
                        bad += 1;
                    }
                }
                println!(
                    "{:<20} {}",
                    row.label(),
                    if bad == 0 {
                        format!("ok ({trials} instances)")
                    } else {
                        format!("FAILED on {bad} of {trials} instances")
                    }
                );
                failures += bad;
            }
            if failures > 0 {
                bail!(VerificationFailure(format!(
                    "{failures} instances violated their table claims"
                )));
            }
        }
        Cmd::Gen {
            m,
            n,
            r,
            p,
            seed,
            out,
        } => {
            let field = PrimeField::new(p)?;
            let mut rng = SplitMix64::new(seed);
            let a = match r {
                Some(r) => {
                    if r > m.min(n) {
                        bail!("rank {r} exceeds min({m}, {n})");
                    }
                    random_rank_matrix(m, n, r, field, &mut rng)?
                }
                None => random_matrix(m, n, field, &mut rng),
            };
            let text = pluq::write_matrix(&a);
            match out {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Cmd::Bench {
            n,
            m,
            r,
            p,
            strategy,
            reps,
            seed,
        } => {
            let m = m.unwrap_or(n);
            let field = PrimeField::new(p)?;
            if r > m.min(n) {
                bail!("rank {r} exceeds min({m}, {n})");
            }
            let cost = arithmetic_cost(m, n, r);
            println!("m {m} n {n} r {r} p {p} cost {cost}");
            let mut rng = SplitMix64::new(seed);
            for rep in 1..=reps {
                let a = random_rank_matrix(m, n, r, field, &mut rng)?;
                let start = Instant::now();
                let fac = strategy.run(&a)?;
                let secs = start.elapsed().as_secs_f64();
                if fac.rank() != r {
                    bail!(VerificationFailure(format!(
                        "instance {rep}: computed rank {} != requested {r}",
                        fac.rank()
                    )));
                }
                println!(
                    "rep {rep} rank {} seconds {secs:.6} gflops {:.6} reductions {}",
                    fac.rank(),
                    cost / secs / 1e9,
                    fac.reductions()
                );
            }
        }
    }
    Ok(())
}

/// Random matrix with roughly half its entries zero, so all ranks and
/// profiles are exercised.
fn sparse_random(m: usize, n: usize, field: PrimeField, rng: &mut SplitMix64) -> DenseMatrix {
    let mut a = DenseMatrix::zero(m, n, field);
    for i in 1..=m {
        for j in 1..=n {
            if rng.below(2) == 1 {
                a.set(i, j, rng.element(field));
            }
        }
    }
    a
}
