//! Parsers for the command-line list and range syntaxes.

use wsl::bench::FunctionSpec;
use wsl::{Result, WslError, WslMode};

fn domain(msg: String) -> WslError {
    WslError::Domain(msg)
}

/// Decimal (`0.0078125`) or power of two (`2^-7`).
pub fn parse_eps(text: &str) -> Result<f64> {
    let text = text.trim();
    if let Some(exp) = text.strip_prefix("2^") {
        let e: i32 = exp
            .parse()
            .map_err(|_| domain(format!("invalid exponent in '{text}'")))?;
        return Ok(2f64.powi(e));
    }
    text.parse()
        .map_err(|_| domain(format!("invalid number '{text}'")))
}

/// `a..b` (inclusive, either direction) or a comma list.
pub fn parse_qubits(text: &str) -> Result<Vec<usize>> {
    let parse = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .map_err(|_| domain(format!("invalid qubit count '{s}'")))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        return Ok(if lo <= hi {
            (lo..=hi).collect()
        } else {
            (hi..=lo).rev().collect()
        });
    }
    text.split(',').map(parse).collect()
}

/// `2^-a..2^-b` (every integer exponent in between) or a comma list.
pub fn parse_eps_grid(text: &str) -> Result<Vec<f64>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let exponent = |s: &str| -> Result<i32> {
            s.trim()
                .strip_prefix("2^")
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| domain(format!("range bounds must look like 2^-k, got '{s}'")))
        };
        let (a, b) = (exponent(lo)?, exponent(hi)?);
        let exps: Vec<i32> = if a <= b {
            (a..=b).collect()
        } else {
            (b..=a).rev().collect()
        };
        return Ok(exps.into_iter().map(|e| 2f64.powi(e)).collect());
    }
    text.split(',').map(parse_eps).collect()
}

pub fn parse_functions(text: &str) -> Result<Vec<FunctionSpec>> {
    if text.trim() == "all" {
        return Ok(FunctionSpec::all());
    }
    text.split(',')
        .map(|id| FunctionSpec::from_id(id.trim()))
        .collect()
}

pub fn parse_modes(text: &str) -> Result<Vec<WslMode>> {
    text.split(',').map(|m| m.trim().parse()).collect()
}

/// `name=value`
pub fn parse_param(text: &str) -> Result<(&str, f64)> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| domain(format!("parameter must be name=value, got '{text}'")))?;
    Ok((name.trim(), parse_eps(value)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_forms() {
        assert_eq!(parse_eps("2^-7").unwrap(), 0.0078125);
        assert_eq!(parse_eps("0.0078125").unwrap(), 0.0078125);
        assert!(parse_eps("2^x").is_err());
    }

    #[test]
    fn qubit_ranges() {
        assert_eq!(parse_qubits("7..13").unwrap(), (7..=13).collect::<Vec<_>>());
        assert_eq!(parse_qubits("3,5").unwrap(), vec![3, 5]);
        assert_eq!(parse_qubits("12").unwrap(), vec![12]);
        assert!(parse_qubits("a..3").is_err());
    }

    #[test]
    fn eps_grid_range() {
        let grid = parse_eps_grid("2^-3..2^-10").unwrap();
        assert_eq!(grid.len(), 8);
        assert_eq!(grid[0], 0.125);
        assert_eq!(grid[7], 2f64.powi(-10));
        assert_eq!(parse_eps_grid("0.5,2^-2").unwrap(), vec![0.5, 0.25]);
    }

    #[test]
    fn lists() {
        assert_eq!(parse_functions("all").unwrap().len(), 6);
        assert_eq!(parse_functions("ghz, sinc").unwrap().len(), 2);
        assert!(parse_functions("nope").is_err());
        assert_eq!(
            parse_modes("incomplete,correct").unwrap(),
            vec![WslMode::Incomplete, WslMode::Correct]
        );
        assert_eq!(parse_param("sigma=0.5").unwrap(), ("sigma", 0.5));
    }
}
