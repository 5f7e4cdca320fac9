//! Plain-text serialization of matrices and permutations.
//!
//! Matrix files start with a header line `m n p`, followed by `m` lines of
//! `n` entries each, all canonical values in `[0, p)`. Permutation files
//! start with the size on its own line, followed by the images. All parse
//! errors carry the 1-based line number they were detected on.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;

/// Guard against absurd headers before allocating anything.
const MAX_DIM: usize = 1 << 20;
const MAX_ENTRIES: usize = 1 << 24;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_token<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

/// Parses a matrix in the `m n p` header format.
pub fn parse_matrix(input: &str) -> Result<DenseMatrix> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(parse_err(1, "expected header 'm n p'"));
    }
    let m: usize = parse_token(toks[0], 1, "row count")?;
    let n: usize = parse_token(toks[1], 1, "column count")?;
    let p: u64 = parse_token(toks[2], 1, "modulus")?;
    if m > MAX_DIM || n > MAX_DIM || m.saturating_mul(n) > MAX_ENTRIES {
        return Err(parse_err(1, format!("dimensions {m}x{n} too large")));
    }
    let field = PrimeField::new(p).map_err(|e| parse_err(1, e.to_string()))?;
    let mut a = DenseMatrix::zero(m, n, field);
    for i in 1..=m {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| parse_err(i + 1, format!("expected {m} rows, found {}", i - 1)))?;
        let lineno = idx + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        for (j, tok) in toks.iter().enumerate() {
            let v: u64 = parse_token(tok, lineno, "entry")?;
            if !field.is_canonical(v) {
                return Err(parse_err(lineno, format!("entry {v} not below modulus {p}")));
            }
            a.set(i, j + 1, v);
        }
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(parse_err(idx + 1, "unexpected content after matrix rows"));
        }
    }
    Ok(a)
}

pub fn write_matrix(a: &DenseMatrix) -> String {
    let mut out = format!("{} {} {}\n", a.rows(), a.cols(), a.field().modulus());
    for i in 1..=a.rows() {
        let row: Vec<String> = a.row(i).iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a permutation: the size on the first line, then its images.
pub fn parse_permutation(input: &str) -> Result<Permutation> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 1 {
        return Err(parse_err(1, "expected the permutation size alone on line 1"));
    }
    let n: usize = parse_token(toks[0], 1, "size")?;
    if n > MAX_ENTRIES {
        return Err(parse_err(1, format!("size {n} too large")));
    }
    let mut images = Vec::with_capacity(n);
    let mut last_line = 1;
    for (idx, line) in lines {
        last_line = idx + 1;
        for tok in line.split_whitespace() {
            if images.len() == n {
                return Err(parse_err(last_line, "unexpected content after images"));
            }
            images.push(parse_token::<usize>(tok, last_line, "image")?);
        }
    }
    if images.len() < n {
        return Err(parse_err(
            last_line,
            format!("expected {n} images, found {}", images.len()),
        ));
    }
    Permutation::from_images(images).map_err(|e| parse_err(last_line, e.to_string()))
}

pub fn write_permutation(p: &Permutation) -> String {
    let images: Vec<String> = p.images().iter().map(usize::to_string).collect();
    format!("{}\n{}\n", p.size(), images.join(" "))
}
