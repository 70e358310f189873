//! Problem files: `;`-terminated statements, `#` starts a comment.
//!
//! ```text
//! ring Q[a,x,y];
//! grading [0,1,1];
//! ideal [ x - a*y, y^2 ];
//! point [1];
//! matrix B1 [[1, a],[0, 1]];
//! tuple [ x - a*y ];
//! ```

use reembed::matrix::PolyMatrix;
use reembed::{Error, Poly, Rational, Result, Ring};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default)]
pub struct RawProblem {
    pub vars: Option<Vec<String>>,
    pub grading: Option<Vec<u32>>,
    pub ideal: Vec<String>,
    pub points: Vec<Vec<String>>,
    pub matrices: Vec<(String, Vec<Vec<String>>)>,
    pub tuple: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: Ring,
    pub gens: Vec<Poly>,
    pub points: Vec<Vec<Rational>>,
    pub matrices: Vec<(String, PolyMatrix)>,
    pub tuple: Option<Vec<Poly>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn strip_comments(text: &str) -> String {
    text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n")
}

/// Split on commas that are not nested in brackets or parentheses.
pub fn split_top(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn bracketed<'a>(s: &'a str, what: &str) -> Result<&'a str> {
    let s = s.trim();
    s.strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| bad(format!("{what}: expected a bracketed list, got `{s}`")))
}

fn list(s: &str, what: &str) -> Result<Vec<String>> {
    let items = split_top(bracketed(s, what)?);
    if items.iter().any(|i| i.is_empty()) {
        return Err(bad(format!("{what}: empty list entry")));
    }
    Ok(items)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| bad(format!("not a rational number: `{}`", s.trim())))
}

pub fn parse_raw(text: &str) -> Result<RawProblem> {
    let mut p = RawProblem::default();
    let clean = strip_comments(text);
    let mut stmts: Vec<&str> = clean.split(';').map(str::trim).collect();
    if stmts.last().is_some_and(|s| s.is_empty()) {
        stmts.pop();
    }
    for stmt in stmts {
        if stmt.is_empty() {
            continue;
        }
        let (key, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
        let rest = rest.trim();
        match key {
            "ring" => {
                let inner = rest
                    .strip_prefix("Q[")
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| bad(format!("ring: expected `Q[...]`, got `{rest}`")))?;
                let vars: Vec<String> = inner.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
                p.vars = Some(vars);
            }
            "grading" => {
                let w = list(rest, "grading")?
                    .iter()
                    .map(|x| x.parse::<u32>().map_err(|_| bad(format!("grading: `{x}` is not a non-negative integer"))))
                    .collect::<Result<Vec<u32>>>()?;
                p.grading = Some(w);
            }
            "ideal" => {
                let body = bracketed(rest, "ideal")?;
                p.ideal = split_top(body).into_iter().filter(|g| !g.is_empty()).collect();
            }
            "point" => p.points.push(list(rest, "point")?),
            "tuple" => p.tuple = Some(list(rest, "tuple")?),
            "matrix" => {
                let (name, body) = rest.split_once(char::is_whitespace).ok_or_else(|| bad("matrix: expected a name and rows"))?;
                let rows = list(body, "matrix")?.iter().map(|r| list(r, "matrix row")).collect::<Result<Vec<_>>>()?;
                if rows.iter().any(|r| r.len() != rows[0].len()) {
                    return Err(bad(format!("matrix {name}: rows of different lengths")));
                }
                p.matrices.push((name.to_string(), rows));
            }
            other => return Err(bad(format!("unknown statement `{other}`"))),
        }
    }
    Ok(p)
}

fn parse_matrix(ring: &Ring, rows: &[Vec<String>]) -> Result<PolyMatrix> {
    rows.iter().map(|r| r.iter().map(|e| ring.parse(e)).collect()).collect()
}

impl RawProblem {
    /// Build the ring; an undeclared grading is found by `detect`, or is all zeros.
    pub fn resolve(&self, detect: impl Fn(&Ring, &[Poly]) -> Option<Vec<u32>>) -> Result<Problem> {
        let vars = self.vars.clone().ok_or_else(|| bad("missing `ring` statement"))?;
        let flat = Ring::new(&vars, &vec![0; vars.len()])?;
        let gens = self.ideal.iter().map(|g| flat.parse(g)).collect::<Result<Vec<_>>>()?;
        let weights = match &self.grading {
            Some(w) if w.len() != vars.len() => {
                return Err(bad(format!("grading has {} entries for {} indeterminates", w.len(), vars.len())))
            }
            Some(w) => w.clone(),
            None => detect(&flat, &gens).unwrap_or_else(|| vec![0; vars.len()]),
        };
        let ring = Ring::new(&vars, &weights)?;
        let points = self.points.iter().map(|p| p.iter().map(|c| parse_rational(c)).collect()).collect::<Result<_>>()?;
        let matrices =
            self.matrices.iter().map(|(n, rows)| Ok((n.clone(), parse_matrix(&ring, rows)?))).collect::<Result<_>>()?;
        let tuple = match &self.tuple {
            Some(t) => Some(t.iter().map(|f| ring.parse(f)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        Ok(Problem { ring, gens, points, matrices, tuple })
    }
}

/// Matrices named `B<d>` keyed by `d`.
pub fn fixtures_by_degree(ring: &Ring, raw: &RawProblem) -> Result<BTreeMap<u64, PolyMatrix>> {
    let mut out = BTreeMap::new();
    for (name, rows) in &raw.matrices {
        let d = name
            .strip_prefix('B')
            .and_then(|d| d.parse::<u64>().ok())
            .ok_or_else(|| bad(format!("fixture matrix `{name}` must be named B<degree>")))?;
        out.insert(d, parse_matrix(ring, rows)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statements_and_comments() {
        let raw = parse_raw(
            "# header\nring Q[a, x,y];\ngrading [0,1,1];  # weights\nideal [ x - a*y,\n  (a+1)*y^2 ];\npoint [1/2];\nmatrix B1 [[1, a],[0, 1]];\n",
        )
        .unwrap();
        assert_eq!(raw.vars.as_deref(), Some(&["a".to_string(), "x".into(), "y".into()][..]));
        assert_eq!(raw.ideal, vec!["x - a*y", "(a+1)*y^2"]);
        let p = raw.resolve(|_, _| None).unwrap();
        assert_eq!(p.points[0][0], reembed::coeff::rat(1, 2));
        assert_eq!(fixtures_by_degree(&p.ring, &raw).unwrap()[&1][0][1], p.ring.parse("a").unwrap());
    }

    #[test]
    fn malformed_input() {
        assert!(parse_raw("ring R[x];").is_err());
        assert!(parse_raw("frobnicate [x];").is_err());
        assert!(parse_raw("matrix B1 [[1, 2],[3]];").is_err());
        let raw = parse_raw("ring Q[x,y]; grading [1];").unwrap();
        assert!(raw.resolve(|_, _| None).is_err());
        let raw = parse_raw("ring Q[x]; ideal [x*z];").unwrap();
        assert!(raw.resolve(|_, _| None).is_err());
    }

    #[test]
    fn nested_commas() {
        assert_eq!(split_top("[1, a],[b, (c+d)]"), vec!["[1, a]", "[b, (c+d)]"]);
        assert!(split_top("").is_empty());
    }
}
