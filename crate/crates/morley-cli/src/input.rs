//! System description files: a flat key-value format with the four
//! keys `modulus`, `weights`, `vars`, `polys`, validated into a
//! ready-to-use system over Q (modulus 0) or F_p.

use std::fmt;
use std::path::Path;

use serde::Deserialize;

use morley_core::parse::parse;
use morley_core::{is_prime, FpSystem, RatSystem, RingDescriptor, SystemConfig};

/// Parsed file contents, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    /// 0 for rational coefficients, else a prime < 2^31.
    pub modulus: u64,
    pub weights: Vec<i64>,
    pub vars: Vec<String>,
    pub polys: Vec<String>,
}

/// A validated system over one of the two supported fields.
pub enum Loaded {
    Rat(RatSystem),
    Fp(FpSystem),
}

pub struct LoadedInput {
    pub file: InputFile,
    pub system: Loaded,
}

#[derive(Debug)]
pub enum InputError {
    Io { path: String, message: String },
    Format(String),
    Invalid(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io { path, message } => write!(f, "{path}: {message}"),
            InputError::Format(m) => write!(f, "input format: {m}"),
            InputError::Invalid(m) => write!(f, "invalid input: {m}"),
        }
    }
}

impl std::error::Error for InputError {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse and validate a description file into a system.
pub fn load(path: &Path) -> Result<LoadedInput, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let file: InputFile =
        toml::from_str(&text).map_err(|e| InputError::Format(e.to_string().trim().to_string()))?;
    let system = build(&file)?;
    Ok(LoadedInput { file, system })
}

/// Validate already-parsed file contents into a system.
pub fn build(file: &InputFile) -> Result<Loaded, InputError> {
    if file.weights.is_empty() || file.weights.len() != file.vars.len() {
        return Err(InputError::Invalid(format!(
            "weights and vars must have the same nonzero length (got {} and {})",
            file.weights.len(),
            file.vars.len()
        )));
    }
    for (w, v) in file.weights.iter().zip(&file.vars) {
        if *w <= 0 {
            return Err(InputError::Invalid(format!(
                "weight of `{v}` must be positive (got {w})"
            )));
        }
    }
    for (i, v) in file.vars.iter().enumerate() {
        if !is_identifier(v) {
            return Err(InputError::Invalid(format!(
                "variable name `{v}` is not a valid identifier"
            )));
        }
        if file.vars[..i].contains(v) {
            return Err(InputError::Invalid(format!("duplicate variable name `{v}`")));
        }
    }
    let ring = RingDescriptor::x_ring(file.weights.clone(), file.vars.clone());
    match file.modulus {
        0 => {
            let polys = parse_all(&file.polys, &ring, &())?;
            let system = SystemConfig::new(ring, (), polys)
                .map_err(|e| InputError::Invalid(e.to_string()))?;
            Ok(Loaded::Rat(system))
        }
        p if p >= 1 << 31 => Err(InputError::Invalid(format!(
            "modulus {p} is too large (must be < 2^31)"
        ))),
        p if !is_prime(p) => Err(InputError::Invalid(format!("modulus {p} is not prime"))),
        p => {
            let polys = parse_all(&file.polys, &ring, &p)?;
            let system = SystemConfig::new(ring, p, polys)
                .map_err(|e| InputError::Invalid(e.to_string()))?;
            Ok(Loaded::Fp(system))
        }
    }
}

fn parse_all<K: morley_core::Field>(
    sources: &[String],
    ring: &std::sync::Arc<RingDescriptor>,
    cfg: &K::Config,
) -> Result<Vec<morley_core::WPoly<K>>, InputError> {
    sources
        .iter()
        .enumerate()
        .map(|(i, s)| {
            parse(s, ring, cfg)
                .map_err(|e| InputError::Invalid(format!("polynomial {}: {e}", i + 1)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(modulus: u64, weights: Vec<i64>, vars: &[&str], polys: &[&str]) -> InputFile {
        InputFile {
            modulus,
            weights,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            polys: polys.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn loads_rational_system() {
        let f = file(0, vec![1], &["x"], &["x^2", "x^3"]);
        match build(&f).unwrap() {
            Loaded::Rat(s) => {
                assert_eq!(s.n(), 1);
                assert_eq!(s.r(), 2);
                assert_eq!(s.degrees, vec![2, 3]);
                assert_eq!(s.delta, 4);
            }
            Loaded::Fp(_) => panic!("expected rational system"),
        }
    }

    #[test]
    fn rejects_inhomogeneous() {
        let f = file(0, vec![1], &["x"], &["x^2 + x"]);
        let e = build(&f).err().unwrap().to_string();
        assert!(e.contains("degrees"), "{e}");
    }

    #[test]
    fn rejects_non_prime_modulus() {
        let f = file(4, vec![1], &["x"], &["x^2"]);
        let e = build(&f).err().unwrap().to_string();
        assert!(e.contains("not prime"), "{e}");
        let f = file(1 << 32, vec![1], &["x"], &["x^2"]);
        assert!(build(&f).err().unwrap().to_string().contains("too large"));
    }

    #[test]
    fn rejects_bad_shapes() {
        let f = file(0, vec![1, 1], &["x"], &["x^2"]);
        assert!(build(&f).err().unwrap().to_string().contains("same nonzero length"));
        let f = file(0, vec![1, 0], &["x", "y"], &["x^2"]);
        assert!(build(&f).err().unwrap().to_string().contains("positive"));
        let f = file(0, vec![1, 1], &["x", "x"], &["x^2"]);
        assert!(build(&f).err().unwrap().to_string().contains("duplicate"));
        let f = file(0, vec![1], &["2x"], &["x^2"]);
        assert!(build(&f).err().unwrap().to_string().contains("identifier"));
        let f = file(0, vec![1, 1], &["x", "y"], &["x*y"]);
        assert!(build(&f).err().unwrap().to_string().contains("at least"));
    }

    #[test]
    fn reports_parse_offsets() {
        let f = file(0, vec![1], &["x"], &["x^2 + z"]);
        let e = build(&f).err().unwrap().to_string();
        assert!(e.contains("polynomial 1"), "{e}");
        assert!(e.contains("offset"), "{e}");
    }
}
