//! Graph expressions for the command line.
//!
//! ```text
//! expr  := term (('x' | '*') term)*
//! term  := NAME [ '(' arg (',' arg)* ')' ]
//! arg   := INT | expr
//! ```
//!
//! Short names `P5`, `C5`, `K5` are paths, cycles and complete graphs, so
//! `P4xC5` is a cylinder grid.

use pdthrottle::generators::{self, GridLayout};
use pdthrottle::Graph;

use crate::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(usize),
    Open,
    Close,
    Comma,
    Times,
}

fn lex(src: &str) -> Result<Vec<Tok>, HarnessError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '*' | '□' => {
                out.push(Tok::Times);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Int(
                    s.parse().map_err(|_| bad(src, "number too large"))?,
                ));
            }
            c if c.is_ascii_alphabetic() => {
                if c == 'x' && matches!(out.last(), Some(Tok::Name(_) | Tok::Close | Tok::Int(_))) {
                    out.push(Tok::Times);
                    i += 1;
                    continue;
                }
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '-') {
                    i += 1;
                }
                // digits glued to a name, as in P5
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Name(chars[start..i].iter().collect()));
            }
            _ => return Err(bad(src, &format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

fn bad(src: &str, why: &str) -> HarnessError {
    HarnessError::Usage(format!("cannot parse graph expression `{src}`: {why}"))
}

#[derive(Clone, Debug)]
enum Arg {
    Int(usize),
    Graph(Graph),
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Graph, HarnessError> {
        let mut g = self.term()?;
        while self.peek() == Some(&Tok::Times) {
            self.pos += 1;
            let h = self.term()?;
            g = generators::cartesian_product(&g, &h)?;
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph, HarnessError> {
        let name = match self.next() {
            Some(Tok::Name(n)) => n,
            other => {
                return Err(bad(
                    self.src,
                    &format!("expected a graph name, found {other:?}"),
                ))
            }
        };
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::Open) {
            self.pos += 1;
            loop {
                args.push(self.arg()?);
                match self.next() {
                    Some(Tok::Comma) => continue,
                    Some(Tok::Close) => break,
                    other => {
                        return Err(bad(
                            self.src,
                            &format!("expected `,` or `)`, found {other:?}"),
                        ))
                    }
                }
            }
        }
        build(self.src, &name, &args)
    }

    fn arg(&mut self) -> Result<Arg, HarnessError> {
        if let Some(Tok::Int(v)) = self.peek() {
            let v = *v;
            self.pos += 1;
            return Ok(Arg::Int(v));
        }
        Ok(Arg::Graph(self.expr()?))
    }
}

fn ints(src: &str, name: &str, args: &[Arg]) -> Result<Vec<usize>, HarnessError> {
    args.iter()
        .map(|a| match a {
            Arg::Int(v) => Ok(*v),
            Arg::Graph(_) => Err(bad(src, &format!("`{name}` takes integers"))),
        })
        .collect()
}

fn one_int(src: &str, name: &str, args: &[Arg]) -> Result<usize, HarnessError> {
    match ints(src, name, args)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(bad(src, &format!("`{name}` takes one integer"))),
    }
}

fn graphs(src: &str, name: &str, args: &[Arg]) -> Result<Vec<Graph>, HarnessError> {
    args.iter()
        .map(|a| match a {
            Arg::Graph(g) => Ok(g.clone()),
            Arg::Int(_) => Err(bad(src, &format!("`{name}` takes graphs"))),
        })
        .collect()
}

fn build(src: &str, name: &str, args: &[Arg]) -> Result<Graph, HarnessError> {
    let short = |prefix: char| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        (!rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) && args.is_empty())
            .then(|| rest.parse().ok())
            .flatten()
    };
    if let Some(n) = short('P') {
        return Ok(generators::path(n)?);
    }
    if let Some(n) = short('C') {
        return Ok(generators::cycle(n)?);
    }
    if let Some(n) = short('K') {
        return Ok(generators::complete(n)?);
    }
    let g = match name {
        "path" => generators::path(one_int(src, name, args)?)?,
        "cycle" => generators::cycle(one_int(src, name, args)?)?,
        "complete" => generators::complete(one_int(src, name, args)?)?,
        "star" => generators::star(one_int(src, name, args)?)?,
        "spider" => generators::spider(&ints(src, name, args)?)?,
        "gd" | "g-d" => generators::g_d_construction(one_int(src, name, args)?)?,
        "family-a" => {
            let i = one_int(src, name, args)?;
            generators::family_a()
                .into_iter()
                .nth(i)
                .ok_or_else(|| bad(src, "family-a index must be 0..=6"))?
                .graph
        }
        "example-h" => generators::example_h().graph,
        "example-w" => generators::example_w().graph,
        "interval-example" => generators::fig7_interval_graph().0.graph,
        "grid" | "cylinder" | "torus" => {
            let dims = ints(src, name, args)?;
            let [r, c] = dims[..] else {
                return Err(bad(src, &format!("`{name}` takes two integers")));
            };
            let (wr, wc) = match name {
                "grid" => (false, false),
                "cylinder" => (false, true),
                _ => (true, true),
            };
            GridLayout::new(r, c, wr, wc)?.graph()?
        }
        "corona" | "half-order" | "product" => {
            let gs = graphs(src, name, args)?;
            match (name, gs.as_slice()) {
                ("corona", [h]) => generators::corona(h)?,
                ("half-order", [h]) => generators::half_order_construction(h)?,
                ("product", [a, b]) => generators::cartesian_product(a, b)?,
                _ => return Err(bad(src, &format!("wrong number of arguments to `{name}`"))),
            }
        }
        _ => return Err(bad(src, &format!("unknown graph `{name}`"))),
    };
    Ok(g)
}

/// Parses a graph expression such as `spider(7,2,2,2,2,2) x P2`.
pub fn parse_graph(src: &str) -> Result<Graph, HarnessError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    let g = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(bad(src, "trailing input"));
    }
    Ok(g)
}

/// Builds the expression for `generate <family> <params...>`: a lone argument
/// is parsed as is, otherwise `family(p1,p2,...)`.
pub fn family_call(family: &str, params: &[String]) -> String {
    if params.is_empty() {
        family.to_string()
    } else {
        format!("{family}({})", params.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_names_and_products() {
        let g = parse_graph("P4xP5").unwrap();
        assert_eq!((g.order(), g.max_degree()), (20, 4));
        let g = parse_graph("K3 * K4").unwrap();
        assert_eq!((g.order(), g.min_degree(), g.max_degree()), (12, 5, 5));
        assert_eq!(
            parse_graph("P4xC5").unwrap(),
            parse_graph("cylinder(4,5)").unwrap()
        );
    }

    #[test]
    fn nested_calls() {
        let g = parse_graph("corona(corona(P2))").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(parse_graph("half-order(P2)").unwrap(), g);
        let g = parse_graph("spider(7,2,2,2,2,2)xP2").unwrap();
        assert_eq!(g.order(), 36);
        let g = parse_graph(&family_call(
            "spider",
            &["4".into(), "1".into(), "1".into()],
        ))
        .unwrap();
        assert_eq!(g.order(), 7);
    }

    #[test]
    fn examples_by_name() {
        assert_eq!(parse_graph("example-w").unwrap().order(), 17);
        assert_eq!(parse_graph("example-h").unwrap().order(), 12);
        assert_eq!(parse_graph("interval-example").unwrap().order(), 6);
        assert_eq!(parse_graph("family-a(4)").unwrap().order(), 4);
    }

    #[test]
    fn errors() {
        assert!(parse_graph("Q5").is_err());
        assert!(parse_graph("path(").is_err());
        assert!(parse_graph("C2").is_err());
        assert!(parse_graph("P3 P4").is_err());
    }
}
