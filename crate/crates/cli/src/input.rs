//! Reading tableaux, posets and cell lists from flags and files.

use std::fs;
use std::io::Read;

use tableau_dynamics::posets::FinitePoset;
use tableau_dynamics::{Cell, Error, Partition, Result, Tableau};

fn parse_error(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        message: message.into(),
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String> {
    let mut text = String::new();
    let outcome = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    outcome.map_err(|e| parse_error(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

/// Inline rows separated by `/`. Entries are separated by spaces or commas;
/// a row written without separators, like `1123`, is read digit by digit.
/// `.` marks a cell of the inner shape.
pub fn parse_inline_rows(s: &str) -> Result<Vec<Vec<u32>>> {
    let mut rows = Vec::new();
    for (i, row) in s.split('/').enumerate() {
        let row = row.trim();
        let tokens: Vec<&str> = row
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let tokens: Vec<String> = if tokens.len() == 1 && tokens[0].chars().count() > 1 {
            tokens[0].chars().map(String::from).collect()
        } else {
            tokens.iter().map(|t| t.to_string()).collect()
        };
        if tokens.is_empty() {
            return Err(parse_error(format!("row {} is empty", i + 1)));
        }
        let entries = tokens
            .iter()
            .map(|t| match t.as_str() {
                "." => Ok(0),
                t => match t.parse::<u32>() {
                    Ok(0) => Err(parse_error(format!("row {}: entries must be positive", i + 1))),
                    Ok(v) => Ok(v),
                    Err(_) => Err(parse_error(format!("row {}: bad entry `{t}`", i + 1))),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(entries);
    }
    Ok(rows)
}

/// A tableau from `--tableau` (inline, ceiling from `-k` or the largest
/// entry) or from `--input` (text format with a `k=` header).
pub fn load_tableau(inline: Option<&str>, input: Option<&str>, ceiling: Option<u32>) -> Result<Tableau> {
    let t = match (inline, input) {
        (Some(s), None) => {
            let rows = parse_inline_rows(s)?;
            let k = ceiling.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(1));
            let t = if rows.iter().flatten().any(|&v| v == 0) {
                let skew = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|v| (v != 0).then_some(v)).collect())
                    .collect();
                Tableau::from_skew_rows(skew, k)
            } else {
                Tableau::from_rows(rows, k)
            };
            t.map_err(|e| parse_error(e.to_string()))?
        }
        (None, Some(path)) => {
            let t: Tableau = read_source(path)?.parse()?;
            match ceiling {
                Some(k) if k != t.ceiling() => {
                    return Err(parse_error(format!("-k {k} disagrees with header k={}", t.ceiling())))
                }
                _ => t,
            }
        }
        (None, None) => return Err(parse_error("a tableau is required: --tableau or --input")),
        (Some(_), Some(_)) => return Err(parse_error("give only one of --tableau and --input")),
    };
    Ok(t)
}

/// `r,c;r,c;…`, 1-based.
pub fn parse_cells(s: &str) -> Result<Vec<Cell>> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let (r, c) = pair
                .trim_matches(|ch| ch == '(' || ch == ')')
                .split_once(',')
                .ok_or_else(|| parse_error(format!("expected `r,c`, found `{pair}`")))?;
            let num = |v: &str| -> Result<usize> {
                v.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| parse_error(format!("bad coordinate `{}`", v.trim())))
            };
            Ok(Cell::new(num(r)?, num(c)?))
        })
        .collect()
}

/// `1,4,5`, 1-based; returned 0-based.
pub fn parse_elements(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|v| {
            v.parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .map(|n| n - 1)
                .ok_or_else(|| parse_error(format!("bad element `{v}`")))
        })
        .collect()
}

/// `m x n`, `mxn` or `m×n`.
pub fn parse_rectangle(s: &str) -> Result<(usize, usize)> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (m, n) = cleaned
        .split_once(['x', 'X', '×'])
        .ok_or_else(|| parse_error(format!("expected `m x n`, found `{s}`")))?;
    let num = |v: &str| v.parse::<usize>().ok().filter(|&n| n > 0);
    match (num(m), num(n)) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(parse_error(format!("expected `m x n`, found `{s}`"))),
    }
}

/// `a,b,c`.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| parse_error(format!("bad part `{}`", v.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| parse_error(e.to_string()))
}

pub fn load_poset(path: &str) -> Result<FinitePoset> {
    read_source(path)?.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_forms() {
        assert_eq!(
            parse_inline_rows("1123/3344/55").unwrap(),
            vec![vec![1, 1, 2, 3], vec![3, 3, 4, 4], vec![5, 5]]
        );
        assert_eq!(parse_inline_rows("1 10/12").unwrap(), vec![vec![1, 10], vec![1, 2]]);
        assert_eq!(parse_inline_rows(". 1/2").unwrap(), vec![vec![0, 1], vec![2]]);
        assert!(parse_inline_rows("1 0 2").is_err());
        assert!(parse_inline_rows("1//2").is_err());
    }

    #[test]
    fn cells_and_shapes() {
        assert_eq!(parse_cells("2,2;2,3").unwrap(), vec![Cell::new(2, 2), Cell::new(2, 3)]);
        assert_eq!(parse_cells("(1,1)").unwrap(), vec![Cell::new(1, 1)]);
        assert!(parse_cells("0,1").is_err());
        assert_eq!(parse_rectangle("3 x 4").unwrap(), (3, 4));
        assert_eq!(parse_rectangle("2x5").unwrap(), (2, 5));
        assert!(parse_rectangle("2x").is_err());
        assert_eq!(parse_partition("3,1").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("1,3").is_err());
        assert_eq!(parse_elements("1, 3").unwrap(), vec![0, 2]);
    }
}
