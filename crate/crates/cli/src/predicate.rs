//! Hunt predicates over report fields.
//!
//! Grammar: `expr := conj (OR conj)*`, `conj := cmp (AND cmp)*`,
//! `cmp := operand op operand` with `op` one of `= == != < <= > >=`.
//! Operands are dotted field paths (`bondage.value`), integers, rationals
//! `p/q`, `inf`, `null`, `true`/`false`, quoted strings or bare words such as
//! `EXACT`. `Delta`, `delta`, `gamma_R` and `ad` resolve to report fields.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde_json::Value;

type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed predicate at column {column}: {message}")]
pub struct PredicateError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
enum Operand {
    Field(Vec<String>),
    Literal(Scalar),
}

/// A comparable view of a JSON value or literal.
#[derive(Debug, Clone, PartialEq)]
enum Scalar {
    Null,
    Bool(bool),
    Num(Rational),
    Inf,
    Str(String),
}

#[derive(Debug, Clone, PartialEq)]
struct Comparison {
    left: Operand,
    op: Op,
    right: Operand,
}

/// Disjunction of conjunctions.
#[derive(Debug, Clone, PartialEq)]
pub struct Predicate {
    source: String,
    clauses: Vec<Vec<Comparison>>,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

/// Top-level report keys; a bare word naming one of these is a field path.
const FIELDS: &[&str] = &[
    "id",
    "graph6",
    "n",
    "m",
    "min_degree",
    "max_degree",
    "ad",
    "girth",
    "chi",
    "gamma",
    "gamma_r",
    "bondage",
    "v_minus_size",
    "v_zero_size",
    "v_plus_size",
    "vertex_critical",
    "bounds",
    "soundness_failures",
    "checks",
    "violations",
    "timings_ms",
];

fn alias(word: &str) -> &str {
    match word {
        "Delta" | "Δ" => "max_degree",
        "delta" | "δ" => "min_degree",
        "gamma_R" | "γ_R" | "γR" => "gamma_r",
        "γ" => "gamma",
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Word(String),
    Quoted(String),
    Op(Op),
    And,
    Or,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, PredicateError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |at: usize, message: &str| PredicateError {
        column: at + 1,
        message: message.into(),
    };
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let two = |op| (Token::Op(op), 2);
        let (tok, len) = match (c, next) {
            ('=', Some('=')) => two(Op::Eq),
            ('!', Some('=')) => two(Op::Ne),
            ('<', Some('=')) => two(Op::Le),
            ('>', Some('=')) => two(Op::Ge),
            ('&', Some('&')) => (Token::And, 2),
            ('|', Some('|')) => (Token::Or, 2),
            ('=', _) => (Token::Op(Op::Eq), 1),
            ('<', _) => (Token::Op(Op::Lt), 1),
            ('>', _) => (Token::Op(Op::Gt), 1),
            ('"' | '\'', _) => {
                let end = chars[i + 1..]
                    .iter()
                    .position(|&(_, d)| d == c)
                    .ok_or_else(|| err(at, "unterminated string"))?;
                let text: String = chars[i + 1..i + 1 + end].iter().map(|&(_, d)| d).collect();
                (Token::Quoted(text), end + 2)
            }
            _ => {
                let len = chars[i..]
                    .iter()
                    .take_while(|&&(_, d)| !d.is_whitespace() && !"=!<>&|\"'".contains(d))
                    .count();
                if len == 0 {
                    return Err(err(at, &format!("unexpected character `{c}`")));
                }
                let word: String = chars[i..i + len].iter().map(|&(_, d)| d).collect();
                let tok = match word.to_ascii_uppercase().as_str() {
                    "AND" => Token::And,
                    "OR" => Token::Or,
                    _ => Token::Word(word),
                };
                (tok, len)
            }
        };
        out.push((at, tok));
        i += len;
    }
    Ok(out)
}

fn literal_from_word(word: &str) -> Option<Scalar> {
    match word {
        "inf" | "INF" | "Inf" => return Some(Scalar::Inf),
        "null" | "NULL" | "none" => return Some(Scalar::Null),
        "true" => return Some(Scalar::Bool(true)),
        "false" => return Some(Scalar::Bool(false)),
        _ => {}
    }
    parse_rational(word).map(Scalar::Num)
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.parse().ok()?;
            let q: i64 = q.parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

impl Predicate {
    pub fn parse(src: &str) -> Result<Self, PredicateError> {
        let tokens = tokenize(src)?;
        if tokens.is_empty() {
            return Err(PredicateError {
                column: 1,
                message: "empty predicate".into(),
            });
        }
        let end = src.chars().count();
        let mut clauses = vec![Vec::new()];
        let mut pos = 0;
        loop {
            let cmp = parse_comparison(&tokens, &mut pos, end)?;
            clauses.last_mut().expect("nonempty").push(cmp);
            match tokens.get(pos) {
                None => break,
                Some((_, Token::And)) => {}
                Some((_, Token::Or)) => clauses.push(Vec::new()),
                Some((at, tok)) => {
                    return Err(PredicateError {
                        column: at + 1,
                        message: format!("expected AND or OR, found {tok:?}"),
                    })
                }
            }
            pos += 1;
        }
        Ok(Predicate {
            source: src.trim().to_string(),
            clauses,
        })
    }

    /// Evaluates against one report. Comparisons involving a missing field,
    /// a null or mismatched types are false (except `!=`).
    pub fn matches(&self, report: &Value) -> bool {
        self.clauses.iter().any(|conj| conj.iter().all(|c| c.holds(report)))
    }
}

fn parse_comparison(tokens: &[(usize, Token)], pos: &mut usize, end: usize) -> Result<Comparison, PredicateError> {
    let left = parse_operand(tokens, pos, end, true)?;
    let op = match tokens.get(*pos) {
        Some((_, Token::Op(op))) => *op,
        Some((at, tok)) => {
            return Err(PredicateError {
                column: at + 1,
                message: format!("expected a comparison operator, found {tok:?}"),
            })
        }
        None => {
            return Err(PredicateError {
                column: end + 1,
                message: "expected a comparison operator".into(),
            })
        }
    };
    *pos += 1;
    let right = parse_operand(tokens, pos, end, false)?;
    Ok(Comparison { left, op, right })
}

fn parse_operand(tokens: &[(usize, Token)], pos: &mut usize, end: usize, left: bool) -> Result<Operand, PredicateError> {
    let Some((at, tok)) = tokens.get(*pos) else {
        return Err(PredicateError {
            column: end + 1,
            message: "expected an operand".into(),
        });
    };
    *pos += 1;
    let operand = match tok {
        Token::Quoted(s) => Operand::Literal(Scalar::Str(s.clone())),
        Token::Word(w) => {
            let mut path: Vec<String> = w.split('.').map(str::to_string).collect();
            path[0] = alias(&path[0]).to_string();
            if FIELDS.contains(&path[0].as_str()) {
                if path.iter().any(String::is_empty) {
                    return Err(PredicateError {
                        column: at + 1,
                        message: format!("empty segment in field path `{w}`"),
                    });
                }
                Operand::Field(path)
            } else if let Some(lit) = literal_from_word(w) {
                Operand::Literal(lit)
            } else if left {
                return Err(PredicateError {
                    column: at + 1,
                    message: format!("unknown field `{w}`"),
                });
            } else {
                Operand::Literal(Scalar::Str(w.clone()))
            }
        }
        other => {
            return Err(PredicateError {
                column: at + 1,
                message: format!("expected an operand, found {other:?}"),
            })
        }
    };
    Ok(operand)
}

fn lookup<'a>(report: &'a Value, path: &[String]) -> Option<&'a Value> {
    path.iter().try_fold(report, |v, key| match v {
        Value::Object(map) => map.get(key),
        Value::Array(items) => key.parse::<usize>().ok().and_then(|i| items.get(i)),
        _ => None,
    })
}

fn scalar_of(v: &Value) -> Scalar {
    match v {
        Value::Null => Scalar::Null,
        Value::Bool(b) => Scalar::Bool(*b),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Scalar::Num(Rational::from_integer(i)))
            .unwrap_or_else(|| Scalar::Str(n.to_string())),
        Value::String(s) => literal_from_word(s).filter(|l| !matches!(l, Scalar::Null | Scalar::Bool(_))).unwrap_or_else(|| Scalar::Str(s.clone())),
        Value::Array(items) => Scalar::Num(Rational::from_integer(items.len() as i64)),
        Value::Object(_) => Scalar::Str(v.to_string()),
    }
}

impl Operand {
    fn resolve(&self, report: &Value) -> Scalar {
        match self {
            Operand::Field(path) => lookup(report, path).map(scalar_of).unwrap_or(Scalar::Null),
            Operand::Literal(s) => s.clone(),
        }
    }
}

fn compare(a: &Scalar, b: &Scalar) -> Option<Ordering> {
    match (a, b) {
        (Scalar::Num(x), Scalar::Num(y)) => Some(x.cmp(y)),
        (Scalar::Num(_), Scalar::Inf) => Some(Ordering::Less),
        (Scalar::Inf, Scalar::Num(_)) => Some(Ordering::Greater),
        (Scalar::Inf, Scalar::Inf) => Some(Ordering::Equal),
        (Scalar::Str(x), Scalar::Str(y)) => Some(x.cmp(y)),
        (Scalar::Bool(x), Scalar::Bool(y)) => Some(x.cmp(y)),
        (Scalar::Null, Scalar::Null) => Some(Ordering::Equal),
        _ => None,
    }
}

impl Comparison {
    fn holds(&self, report: &Value) -> bool {
        let a = self.left.resolve(report);
        let b = self.right.resolve(report);
        let ord = compare(&a, &b);
        let ordered = !matches!(a, Scalar::Null | Scalar::Str(_) | Scalar::Bool(_));
        match self.op {
            Op::Eq => ord == Some(Ordering::Equal),
            Op::Ne => ord != Some(Ordering::Equal),
            Op::Lt => ordered && ord == Some(Ordering::Less),
            Op::Le => ordered && matches!(ord, Some(Ordering::Less | Ordering::Equal)),
            Op::Gt => ordered && ord == Some(Ordering::Greater),
            Op::Ge => ordered && matches!(ord, Some(Ordering::Greater | Ordering::Equal)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn report() -> Value {
        json!({
            "n": 5, "max_degree": 4, "min_degree": 1, "ad": "8/5", "girth": "inf",
            "bondage": {"status": "EXACT", "value": 5, "witness": [[0, 1]]},
            "v_plus_size": 0, "chi": null
        })
    }

    fn eval(p: &str) -> bool {
        Predicate::parse(p).unwrap().matches(&report())
    }

    #[test]
    fn field_to_field() {
        assert!(eval("bondage.value > Delta"));
        assert!(!eval("bondage.value <= Delta"));
        assert!(eval("delta < Delta"));
    }

    #[test]
    fn infinity_and_strings() {
        assert!(eval("girth = inf AND bondage.status = EXACT"));
        assert!(eval("girth > 1000"));
        assert!(!eval("girth = inf AND bondage.status = 'LOWER_BOUND_ONLY'"));
        assert!(eval("bondage.status != UNDEFINED"));
    }

    #[test]
    fn rationals_compare_exactly() {
        assert!(eval("ad = 8/5"));
        assert!(eval("ad > 3/2 && ad < 2"));
        assert!(!eval("ad >= 17/10"));
    }

    #[test]
    fn or_of_ands() {
        assert!(eval("v_plus_size > 0 OR n = 5 AND Delta = 4"));
        assert!(!eval("v_plus_size > 0 or n = 6"));
    }

    #[test]
    fn nulls_and_missing_never_order() {
        assert!(!eval("chi < 3"));
        assert!(eval("chi = null"));
        assert!(!eval("bondage.nothing > 0"));
        assert!(eval("bondage.witness = 1"));
    }

    #[test]
    fn malformed() {
        for bad in ["", "n >", "n 5", "foo > 1", "n > 1 AND", "n = 'x", "n >> 3", "bondage..value > 1"] {
            assert!(Predicate::parse(bad).is_err(), "{bad}");
        }
        let err = Predicate::parse("n > 1 XOR m > 1").unwrap_err();
        assert_eq!(err.column, 7);
    }
}
