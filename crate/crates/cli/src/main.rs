//! Command-line interface over the k3lattice library: lattice inspection,
//! bounded representation searches, Beauville extensions, the involution and
//! intersection calculus on S^[2], and the built-in verification suite.
//!
//! Exit codes: 0 all pass, 1 any failed claim, 2 input error, 3 searches or
//! claims that were inconclusive within the bound.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use k3lattice::format::{parse_lattice, parse_vector, render_lattice};
use k3lattice::{
    beauville_extend, check_density_hypotheses, debarre_involution, isotropic_search,
    picard_lefschetz_reflect, represent, sigma_pairing, star_square_pairing, verify_paper_claims,
    HilbertClass, IntegralLattice, K3Input, LatticeVector, SearchVerdict,
};

#[derive(Parser)]
#[command(name = "k3lattice", version, about = "Exact arithmetic for K3 Picard lattices and Hilbert-scheme Beauville lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LatticeArg {
    /// Path to a lattice file: JSON with fields rank, gram, optional labels
    #[arg(long)]
    lattice: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Print rank, Gram matrix, signature, discriminant and parity of a lattice
    LatticeInfo {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// Search the coordinate box for a vector of prescribed square
    Represent {
        #[command(flatten)]
        lattice: LatticeArg,
        /// Target value of the quadratic form
        #[arg(long, allow_negative_numbers = true)]
        target: i64,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Search the coordinate box for a primitive isotropic vector
    Isotropic {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Print the Beauville lattice Pic(S) + Ze of S^[n]
    BeauvilleExtend {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Apply the Beauville-Debarre involution to a class on S^[2]
    Involution {
        #[command(flatten)]
        lattice: LatticeArg,
        /// Quartic polarization, as an expression in the base labels
        #[arg(long)]
        f4: String,
        /// Class to transform, as an expression in the extended labels (e included)
        #[arg(long)]
        x: String,
    },
    /// Apply the Picard-Lefschetz reflection in a (-2)-class
    Reflect {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        x: String,
        /// The (-2)-class to reflect in
        #[arg(long)]
        c: String,
    },
    /// Intersection number (f - me).(f - me).(g*g) on S^[2]
    Intersect {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        f: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        g: String,
    },
    /// Intersection number (f - me).(f - me).Sigma on S^[2]
    Sigma {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        f: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Check the density-criterion hypotheses for a polarization of degree 2m^2
    DensityCheck {
        #[command(flatten)]
        lattice: LatticeArg,
        /// Polarization class, of square 2m^2
        #[arg(long)]
        f: String,
        /// Second class of positive square
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 50)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the full fixed verification suite
    VerifyPaper {
        #[arg(long, default_value_t = 50)]
        bound: u64,
        /// Seed for the randomized property claims
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_lattice(arg: &LatticeArg) -> Result<IntegralLattice, String> {
    let text = fs::read_to_string(&arg.lattice)
        .map_err(|e| format!("{}: {e}", arg.lattice.display()))?;
    parse_lattice(&text).map_err(|e| e.to_string())
}

/// Renders a vector as a combination of the lattice's labels when present.
fn render_vector(l: &IntegralLattice, v: &LatticeVector) -> String {
    let Some(labels) = l.labels() else {
        return v.to_string();
    };
    let mut out = String::new();
    for (coeff, label) in v.coords().iter().zip(labels) {
        if coeff == &BigInt::from(0) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if coeff > &BigInt::from(0) { " + " } else { " - " });
        } else if coeff < &BigInt::from(0) {
            out.push('-');
        }
        let mag = if coeff < &BigInt::from(0) {
            -coeff
        } else {
            coeff.clone()
        };
        if mag == BigInt::from(1) {
            out.push_str(label);
        } else {
            out.push_str(&format!("{mag}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    format!("{out}  {v}")
}

fn report_verdict(verdict: &SearchVerdict) -> u8 {
    match &verdict.witness {
        Some(w) => {
            println!("Found: witness {w} (bound {})", verdict.bound_used);
            0
        }
        None => {
            println!("NotFoundWithinBound (bound {})", verdict.bound_used);
            3
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::LatticeInfo { lattice, json } => {
            let l = load_lattice(&lattice)?;
            let sig = l.signature();
            if json {
                let doc = serde_json::json!({
                    "rank": l.rank(),
                    "gram": l.gram().iter().map(|r| {
                        r.iter().map(|c| c.to_string()).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                    "labels": l.labels(),
                    "signature": { "n_plus": sig.n_plus, "n_minus": sig.n_minus, "n_zero": sig.n_zero },
                    "discriminant": l.discriminant().to_string(),
                    "hodge_index_valid": l.hodge_index_valid(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("{}", render_lattice(&l));
                println!("signature:    {sig}");
                println!("discriminant: {}", l.discriminant());
                println!("hodge index:  {}", l.hodge_index_valid());
            }
            Ok(0)
        }
        Command::Represent {
            lattice,
            target,
            bound,
        } => {
            let l = load_lattice(&lattice)?;
            let verdict =
                represent(&l, &BigInt::from(target), bound).map_err(|e| e.to_string())?;
            Ok(report_verdict(&verdict))
        }
        Command::Isotropic { lattice, bound } => {
            let l = load_lattice(&lattice)?;
            let verdict = isotropic_search(&l, bound).map_err(|e| e.to_string())?;
            Ok(report_verdict(&verdict))
        }
        Command::BeauvilleExtend { lattice, n } => {
            let l = load_lattice(&lattice)?;
            let b = beauville_extend(&l, n).map_err(|e| e.to_string())?;
            println!("{}", render_lattice(b.extended()));
            Ok(0)
        }
        Command::Involution { lattice, f4, x } => {
            let l = load_lattice(&lattice)?;
            let b = beauville_extend(&l, 2).map_err(|e| e.to_string())?;
            let f4 = parse_vector(&l, &f4).map_err(|e| e.to_string())?;
            let x = parse_vector(b.extended(), &x).map_err(|e| e.to_string())?;
            let image = debarre_involution(&b, &f4, &HilbertClass::from_extended(&x))
                .map_err(|e| e.to_string())?;
            println!("{}", render_vector(b.extended(), &image.embed()));
            Ok(0)
        }
        Command::Reflect { lattice, x, c } => {
            let l = load_lattice(&lattice)?;
            let x = parse_vector(&l, &x).map_err(|e| e.to_string())?;
            let c = parse_vector(&l, &c).map_err(|e| e.to_string())?;
            let image = picard_lefschetz_reflect(&l, &x, &c).map_err(|e| e.to_string())?;
            println!("{}", render_vector(&l, &image));
            Ok(0)
        }
        Command::Intersect { lattice, f, m, g } => {
            let l = load_lattice(&lattice)?;
            let b = beauville_extend(&l, 2).map_err(|e| e.to_string())?;
            let f = parse_vector(&l, &f).map_err(|e| e.to_string())?;
            let g = parse_vector(&l, &g).map_err(|e| e.to_string())?;
            let value = star_square_pairing(&b, &f, &BigInt::from(m), &g)
                .map_err(|e| e.to_string())?;
            println!("{value}");
            Ok(0)
        }
        Command::Sigma { lattice, f, m } => {
            let l = load_lattice(&lattice)?;
            let b = beauville_extend(&l, 2).map_err(|e| e.to_string())?;
            let f = parse_vector(&l, &f).map_err(|e| e.to_string())?;
            let value = sigma_pairing(&b, &f, &BigInt::from(m)).map_err(|e| e.to_string())?;
            println!("{value}");
            Ok(0)
        }
        Command::DensityCheck {
            lattice,
            f,
            g,
            bound,
            json,
        } => {
            let l = load_lattice(&lattice)?;
            let f = parse_vector(&l, &f).map_err(|e| e.to_string())?;
            let g = parse_vector(&l, &g).map_err(|e| e.to_string())?;
            let input = K3Input::new(l, f, 2, bound).map_err(|e| e.to_string())?;
            let report = check_density_hypotheses(&input, &g).map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.exit_code() as u8)
        }
        Command::VerifyPaper { bound, seed, json } => {
            let report = verify_paper_claims(bound, seed);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.exit_code() as u8)
        }
    }
}
