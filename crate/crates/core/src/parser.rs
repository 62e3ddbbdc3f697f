//! Expression front-end.
//!
//! Grammar: variables `x1..xn`, operators `!` (NOT), `&` (AND), `^` (XOR),
//! `|` (OR), parentheses and the constants `0` and `1`. Precedence
//! `! > & > ^ > |`, binary operators left-associative.

use crate::{BooleanFunction, Error, Result, MAX_VARS};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Var(usize),
    Const(u8),
    Not,
    And,
    Xor,
    Or,
    LParen,
    RParen,
}

#[derive(Debug)]
enum Expr {
    Var(usize),
    Const(u8),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Xor(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, point: usize) -> u8 {
        match self {
            Expr::Var(i) => ((point >> (i - 1)) & 1) as u8,
            Expr::Const(c) => *c,
            Expr::Not(e) => 1 - e.eval(point),
            Expr::And(a, b) => a.eval(point) & b.eval(point),
            Expr::Xor(a, b) => a.eval(point) ^ b.eval(point),
            Expr::Or(a, b) => a.eval(point) | b.eval(point),
        }
    }
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn next_token(&mut self) -> Result<Option<(usize, Token)>> {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.text.len() {
            return Ok(None);
        }
        let start = self.pos;
        let tok = match self.text[self.pos] {
            b'!' => Token::Not,
            b'&' => Token::And,
            b'^' => Token::Xor,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0' => Token::Const(0),
            b'1' => Token::Const(1),
            b'x' => {
                let digits_start = self.pos + 1;
                let mut end = digits_start;
                while end < self.text.len() && self.text[end].is_ascii_digit() {
                    end += 1;
                }
                if end == digits_start {
                    return Err(Error::Syntax {
                        position: start,
                        message: "variable name needs an index, e.g. x1".into(),
                    });
                }
                let index: usize = std::str::from_utf8(&self.text[digits_start..end])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Syntax {
                        position: start,
                        message: "variable index too large".into(),
                    })?;
                self.pos = end;
                return Ok(Some((start, Token::Var(index))));
            }
            c => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character '{}'", c as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    n: usize,
    text_len: usize,
}

fn precedence(tok: Token) -> Option<u8> {
    match tok {
        Token::And => Some(3),
        Token::Xor => Some(2),
        Token::Or => Some(1),
        _ => None,
    }
}

impl Parser {
    fn peek(&self) -> Option<(usize, Token)> {
        self.tokens.get(self.cursor).copied()
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.peek();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn end_position(&self) -> usize {
        self.text_len
    }

    fn parse_expr(&mut self, min_prec: u8) -> Result<Expr> {
        let mut lhs = self.parse_atom()?;
        while let Some((_, tok)) = self.peek() {
            let Some(prec) = precedence(tok) else { break };
            if prec < min_prec {
                break;
            }
            self.bump();
            // left-associative: the right side binds one level tighter
            let rhs = self.parse_expr(prec + 1)?;
            lhs = match tok {
                Token::And => Expr::And(Box::new(lhs), Box::new(rhs)),
                Token::Xor => Expr::Xor(Box::new(lhs), Box::new(rhs)),
                Token::Or => Expr::Or(Box::new(lhs), Box::new(rhs)),
                _ => unreachable!(),
            };
        }
        Ok(lhs)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some((_, Token::Not)) => Ok(Expr::Not(Box::new(self.parse_atom()?))),
            Some((pos, Token::Var(index))) => {
                if index < 1 || index > self.n {
                    return Err(Error::Syntax {
                        position: pos,
                        message: format!("variable x{} out of range [1, {}]", index, self.n),
                    });
                }
                Ok(Expr::Var(index))
            }
            Some((_, Token::Const(c))) => Ok(Expr::Const(c)),
            Some((_, Token::LParen)) => {
                let inner = self.parse_expr(0)?;
                match self.bump() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((pos, _)) => Err(Error::Syntax {
                        position: pos,
                        message: "expected ')'".into(),
                    }),
                    None => Err(Error::Syntax {
                        position: self.end_position(),
                        message: "unclosed '('".into(),
                    }),
                }
            }
            Some((pos, _)) => Err(Error::Syntax {
                position: pos,
                message: "expected a variable, constant, '!' or '('".into(),
            }),
            None => Err(Error::Syntax {
                position: self.end_position(),
                message: "unexpected end of expression".into(),
            }),
        }
    }
}

/// Parse `text` over variables `x1..xn` and tabulate it at all 2^n points.
pub fn parse_expression(text: &str, n: usize) -> Result<BooleanFunction> {
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n, max: MAX_VARS });
    }
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(t) = lexer.next_token()? {
        tokens.push(t);
    }
    let mut parser = Parser {
        tokens,
        cursor: 0,
        n,
        text_len: text.len(),
    };
    let expr = parser.parse_expr(0)?;
    if let Some((pos, _)) = parser.peek() {
        return Err(Error::Syntax {
            position: pos,
            message: "trailing input after expression".into(),
        });
    }
    let table: Vec<u8> = (0..1usize << n).map(|point| expr.eval(point)).collect();
    BooleanFunction::from_truth_table(n, &table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn and_example() {
        let f = parse_expression("x1 & x2", 2).unwrap();
        assert_eq!(f.table(), &[0, 0, 0, 1]);
    }

    #[test]
    fn parity_example() {
        let f = parse_expression("x1 ^ x2 ^ x3", 3).unwrap();
        for i in 0..8usize {
            assert_eq!(f.value(i) as u32, (i.count_ones()) % 2);
        }
    }

    #[test]
    fn mixed_example() {
        // x = (1, 0, 0) is index 1; 1 & (0 | !0) = 1
        let f = parse_expression("x1 & (x2 | !x3)", 3).unwrap();
        assert_eq!(f.value(1), 1);
    }

    #[test]
    fn precedence_and_over_or() {
        let a = parse_expression("x1 | x2 & x3", 3).unwrap();
        let b = parse_expression("x1 | (x2 & x3)", 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn precedence_xor_between() {
        let a = parse_expression("x1 ^ x2 & x3 | x1", 3).unwrap();
        let b = parse_expression("((x1 ^ (x2 & x3)) | x1)", 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn not_binds_tightest() {
        let a = parse_expression("!x1 & x2", 2).unwrap();
        let b = parse_expression("(!x1) & x2", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_expression("x1 &", 2) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn variable_out_of_range() {
        match parse_expression("x3", 2) {
            Err(Error::Syntax { position, message }) => {
                assert_eq!(position, 0);
                assert!(message.contains("out of range"));
            }
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn constants_parse() {
        let f = parse_expression("x1 & 1 | 0", 1).unwrap();
        assert_eq!(f.table(), &[0, 1]);
    }
}
