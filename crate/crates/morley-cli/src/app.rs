//! Command-line surface: argument definitions, subcommand dispatch,
//! and exit-code policy (0 verified/success, 2 certificate not
//! established, 3 verification mismatch, 1 usage or input error).

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use morley_core::duality::{chain_with_ring, HomologyTable, TableEntry};
use morley_core::morley::{delta_form, difference_context, lambda_form, telescoping_decomposition};
use morley_core::{
    check_duality, omega_matrix, CheckOptions, Direction, Field, Matrix, MorleyData,
    RingDescriptor, SystemConfig, Verdict,
};

use crate::input::{self, InputFile, Loaded};
use crate::render;
use crate::selftest;

#[derive(Parser, Debug)]
#[command(
    name = "morley",
    version,
    about = "Exact duality checks for weighted polynomial systems via generalized Morley forms"
)]
pub struct Cli {
    /// Path to the system description file
    #[arg(long, value_name = "PATH", global = true)]
    pub input: Option<PathBuf>,
    /// Print only the final verdict line of `check`
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Print dim B_q over the certificate search range
    Hilbert {
        /// Degree bound for the finiteness search
        #[arg(long = "search-bound", value_name = "N")]
        search_bound: Option<i64>,
    },
    /// Print a basis of the Koszul homology H_p(K)_nu
    Homology {
        /// Homological index
        #[arg(long, value_name = "P")]
        p: usize,
        /// Weighted degree
        #[arg(long, value_name = "N", allow_hyphen_values = true)]
        nu: i64,
    },
    /// Print the generalized Morley form (a cycle over the doubled ring)
    Delta,
    /// Print its specialization at Y = 0 (a Koszul cycle of degree delta)
    Lambda,
    /// Print the reduction component at degree nu, contracted with each dual basis vector
    Nabla {
        /// Weighted degree, 0 <= nu <= delta
        #[arg(long, value_name = "N", allow_hyphen_values = true)]
        nu: i64,
    },
    /// Print the matrix of omega at degree nu over the dual and torsion bases
    Omega {
        /// Weighted degree, 0 <= nu <= delta
        #[arg(long, value_name = "N", allow_hyphen_values = true)]
        nu: i64,
        /// Degree bound for the finiteness search
        #[arg(long = "search-bound", value_name = "N")]
        search_bound: Option<i64>,
    },
    /// Run the full degree-by-degree duality verification
    Check {
        /// Also write the report as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Width of the verification strip above delta
        #[arg(long, value_name = "N")]
        slack: Option<i64>,
        /// Degree bound for the finiteness search
        #[arg(long = "search-bound", value_name = "N")]
        search_bound: Option<i64>,
    },
    /// Run the built-in verification corpus
    Selftest,
}

/// What a subcommand produced: stdout text, stderr text, exit code.
pub struct Outcome {
    pub out: String,
    pub err: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(out: String) -> Self {
        Outcome { out, err: String::new(), code: 0 }
    }

    pub fn fail(code: i32, message: String) -> Self {
        Outcome { out: String::new(), err: format!("error: {message}\n"), code }
    }
}

pub fn run(cli: Cli) -> Outcome {
    if matches!(cli.cmd, Cmd::Selftest) {
        return selftest::run();
    }
    let Some(path) = cli.input.as_deref() else {
        return Outcome::fail(1, "--input PATH is required for this subcommand".into());
    };
    let loaded = match input::load(path) {
        Ok(l) => l,
        Err(e) => return Outcome::fail(1, e.to_string()),
    };
    match &loaded.system {
        Loaded::Rat(s) => exec(s, &loaded.file, &cli.cmd, cli.quiet),
        Loaded::Fp(s) => exec(s, &loaded.file, &cli.cmd, cli.quiet),
    }
}

fn exec<K: Field>(cfg: &SystemConfig<K>, file: &InputFile, cmd: &Cmd, quiet: bool) -> Outcome {
    match cmd {
        Cmd::Selftest => unreachable!("handled before input loading"),
        Cmd::Hilbert { search_bound } => {
            let bound = search_bound.unwrap_or_else(|| cfg.default_search_bound());
            if bound < 0 {
                return Outcome::fail(1, "search bound must be nonnegative".into());
            }
            let hi = bound + cfg.max_weight() - 1;
            let dims = cfg.hilbert(hi);
            let cert = cfg.finiteness_certificate(bound);
            let cert_line = match cert {
                morley_core::CertificateStatus::Certified { s0 } => {
                    format!("established (B = 0 from degree {s0} on; search bound {bound})")
                }
                morley_core::CertificateStatus::NotCertified { .. } => {
                    format!("not established (searched up to degree {bound})")
                }
            };
            Outcome::ok(format!(
                "hilbert B, degrees 0..={hi}: {dims:?}\ncertificate: {cert_line}\n"
            ))
        }
        Cmd::Homology { p, nu } => {
            if *p > cfg.r() {
                return Outcome::fail(1, format!("p must be in 0..={} (got {p})", cfg.r()));
            }
            let ctx = cfg.koszul();
            let hp = ctx.homology(*p, *nu);
            let canonical = RingDescriptor::canonical_x(cfg.ring.weights.clone());
            let mut out = format!(
                "H_{p}(K)_{nu}: dim {} (cycles {}, boundaries {})\n",
                hp.dim(),
                hp.cycle_dim(),
                hp.boundary_dim()
            );
            for k in 0..hp.dim() {
                let rep = hp.lifts.col(k);
                let chain = chain_with_ring(&ctx.chain_from_coords(*p, *nu, &rep), &canonical);
                out.push_str(&format!("class {}:\n", k + 1));
                for line in chain.render_lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
            Outcome::ok(out)
        }
        Cmd::Delta => {
            let diff_ctx = difference_context(cfg);
            let dec = telescoping_decomposition(cfg, Direction::Forward);
            let chain = delta_form(cfg, &dec, &diff_ctx);
            let mut out = String::new();
            for line in chain.render_lines() {
                out.push_str(&format!("{line}\n"));
            }
            Outcome::ok(out)
        }
        Cmd::Lambda => {
            let ctx = cfg.koszul();
            let dec = telescoping_decomposition(cfg, Direction::Forward);
            let chain = lambda_form(cfg, &dec, &ctx);
            let canonical = RingDescriptor::canonical_x(cfg.ring.weights.clone());
            let mut out = String::new();
            for line in chain_with_ring(&chain, &canonical).render_lines() {
                out.push_str(&format!("{line}\n"));
            }
            Outcome::ok(out)
        }
        Cmd::Nabla { nu } => {
            if *nu < 0 || *nu > cfg.delta {
                return Outcome::fail(1, format!("nu must be in 0..={} (got {nu})", cfg.delta));
            }
            let ctx = cfg.koszul();
            let md = MorleyData::build(cfg, &ctx);
            let canonical = RingDescriptor::canonical_x(cfg.ring.weights.clone());
            let q = cfg.delta - nu;
            let mut out = format!("nabla component: nu = {nu}, dual degree q = {q}\n");
            let piece = cfg.b_piece(q);
            if piece.b_monomials.is_empty() {
                out.push_str("(B component is zero)\n");
            }
            for (m, u) in piece.b_monomials.iter().zip(cfg.dual_basis(q)) {
                out.push_str(&format!("{}*:\n", m.render(&canonical)));
                let chain = chain_with_ring(&md.nabla.contract(cfg, *nu, &u), &canonical);
                for line in chain.render_lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
            Outcome::ok(out)
        }
        Cmd::Omega { nu, search_bound } => {
            if *nu < 0 || *nu > cfg.delta {
                return Outcome::fail(1, format!("nu must be in 0..={} (got {nu})", cfg.delta));
            }
            let bound = search_bound.unwrap_or_else(|| cfg.default_search_bound());
            let cert = cfg.finiteness_certificate(bound);
            if !cert.is_certified() {
                return Outcome::fail(
                    2,
                    format!("certificate not established (searched up to degree {bound}); omega needs a finite quotient"),
                );
            }
            let ctx = cfg.koszul();
            let md = MorleyData::build(cfg, &ctx);
            let p = cfg.r() - cfg.n();
            let mut table = HomologyTable { p, window_hi: *nu, entries: Default::default() };
            let piece = ctx.homology(p, *nu);
            let torsion = Matrix::<K>::identity(piece.dim());
            table.entries.insert(*nu, TableEntry { piece, torsion });
            let m = match omega_matrix(cfg, &ctx, &md.nabla, &table, *nu) {
                Ok(m) => m,
                Err(e) => return Outcome::fail(3, e.to_string()),
            };
            let mut out = format!(
                "omega at nu = {nu}: dim B*({}) = {}, dim torsion = {}, rank = {}\n",
                cfg.delta - nu,
                m.cols(),
                m.rows(),
                m.rank()
            );
            for line in render::matrix_lines(&m) {
                out.push_str(&format!("{line}\n"));
            }
            Outcome::ok(out)
        }
        Cmd::Check { json, slack, search_bound } => {
            let report = check_duality(
                cfg,
                CheckOptions { slack: *slack, search_bound: *search_bound },
            );
            if let Some(path) = json {
                let doc = render::report_document(&report, file);
                if let Err(e) = std::fs::write(path, render::to_json(&doc)) {
                    return Outcome::fail(1, format!("{}: {e}", path.display()));
                }
            }
            let out = if quiet {
                format!("verdict: {}\n", report.verdict.as_str())
            } else {
                render::text_report(&report)
            };
            let code = match report.verdict {
                Verdict::Verified => 0,
                Verdict::NotCertified => 2,
                Verdict::Mismatch => 3,
            };
            Outcome { out, err: String::new(), code }
        }
    }
}
