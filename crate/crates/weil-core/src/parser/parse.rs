//! Recursive-descent parser for the declaration format.

use super::error::{ParseError, SourceSpan};
use super::lexer::{lex, Tok, Token};
use super::workspace::{AlgebraDecl, AlgebraForm, ConeEntry, DeclKind, ExprDecl, Workspace};
use crate::algebra::{check_morphism, is_weil, tensor, CahiersAlgebra, Poly, Presentation};
use crate::category::{Cone, Diagram};
use crate::jet::{Primitive, SmoothExpr};
use crate::scalar::Rat;
use num_traits::Zero;
use std::sync::Arc;

/// Parses a declaration file into a fully validated workspace. The standard
/// prelude is loaded before the first user declaration.
pub fn parse_file(text: &str) -> Result<Workspace, ParseError> {
    let mut ws = Workspace::with_prelude();
    let tokens = lex(text)?;
    let mut p = P { tokens, pos: 0 };
    while p.peek().tok != Tok::Eof {
        p.parse_decl(&mut ws)?;
    }
    Ok(ws)
}

/// Parses a standalone smooth expression (the `--expr` form).
pub fn parse_expr(text: &str) -> Result<SmoothExpr, ParseError> {
    let tokens = lex(text)?;
    let mut p = P { tokens, pos: 0 };
    let e = p.parse_arith(true, None)?;
    p.expect(Tok::Eof, "end of expression")?;
    Ok(e)
}

struct P {
    tokens: Vec<Token>,
    pos: usize,
}

impl P {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek2(&self) -> &Token {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if &self.peek().tok == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<Token, ParseError> {
        if self.peek().tok == t {
            Ok(self.bump())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&self, what: &str) -> ParseError {
        ParseError::Syntax {
            span: self.peek().span,
            expected: format!("{what}, found {}", self.peek().tok.describe()),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, SourceSpan), ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                let span = self.peek().span;
                self.bump();
                Ok((s, span))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    /// NAME := IDENT adjoined by an adjacent "(INT)" — so `D(2)` is one
    /// name in reference positions while staying ordinary tokens in
    /// arithmetic.
    fn parse_name(&mut self, what: &str) -> Result<(String, SourceSpan), ParseError> {
        let (mut name, span) = self.expect_ident(what)?;
        let adjacent =
            |a: &SourceSpan, b: &SourceSpan| a.line == b.line && a.column + a.length == b.column;
        if self.peek().tok == Tok::LParen && adjacent(&span, &self.peek().span) {
            if let Tok::Int(n) = &self.peek2().tok {
                let lp = self.peek().span;
                let n = n.clone();
                let int_span = self.peek2().span;
                if adjacent(&lp, &int_span) {
                    // Look one further for the closing paren.
                    let rp = &self.tokens[(self.pos + 2).min(self.tokens.len() - 1)];
                    if rp.tok == Tok::RParen && adjacent(&int_span, &rp.span) {
                        self.bump();
                        self.bump();
                        let rp_span = self.bump().span;
                        name = format!("{name}({n})");
                        let length = rp_span.column + rp_span.length - span.column;
                        return Ok((name, SourceSpan::new(span.line, span.column, length)));
                    }
                }
            }
        }
        Ok((name, span))
    }

    fn parse_decl(&mut self, ws: &mut Workspace) -> Result<(), ParseError> {
        let (kw, span) = self.expect_ident("a declaration keyword")?;
        match kw.as_str() {
            "algebra" => self.parse_algebra(ws),
            "morphism" => self.parse_morphism(ws),
            "diagram" => self.parse_diagram(ws),
            "cone" => self.parse_cone(ws),
            "expr" => self.parse_expr_decl(ws),
            other => Err(ParseError::Syntax {
                span,
                expected: format!("algebra, morphism, diagram, cone or expr, found {other}"),
            }),
        }
    }

    fn check_fresh(&self, taken: bool, name: &str, span: SourceSpan) -> Result<(), ParseError> {
        if taken {
            Err(ParseError::DuplicateName {
                name: name.to_string(),
                span,
            })
        } else {
            Ok(())
        }
    }

    fn parse_algebra(&mut self, ws: &mut Workspace) -> Result<(), ParseError> {
        let (name, name_span) = self.parse_name("an algebra name")?;
        self.check_fresh(ws.algebras.contains_key(&name), &name, name_span)?;
        self.expect(Tok::Equals, "'='")?;
        let (form_kw, form_span) = self.expect_ident("'weil' or 'poly'")?;
        let form = match form_kw.as_str() {
            "weil" => AlgebraForm::Weil,
            "poly" => AlgebraForm::Poly,
            other => {
                return Err(ParseError::Syntax {
                    span: form_span,
                    expected: format!("'weil' or 'poly', found {other}"),
                })
            }
        };

        // ring := "R" "[" vars "]" ["/" "(" polys ")"]
        let (r, r_span) = self.expect_ident("'R'")?;
        if r != "R" {
            return Err(ParseError::Syntax {
                span: r_span,
                expected: format!("'R', found {r}"),
            });
        }
        self.expect(Tok::LBracket, "'['")?;
        let mut vars: Vec<String> = Vec::new();
        if self.peek().tok != Tok::RBracket {
            loop {
                let (v, v_span) = self.expect_ident("a variable name")?;
                if vars.contains(&v) {
                    return Err(ParseError::DuplicateName {
                        name: v,
                        span: v_span,
                    });
                }
                vars.push(v);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket, "']'")?;
        let mut rels: Vec<Poly> = Vec::new();
        if self.eat(&Tok::Slash) {
            self.expect(Tok::LParen, "'('")?;
            loop {
                let e = self.parse_arith(false, Some(&vars))?;
                rels.push(expr_to_poly(&e, &vars, name_span)?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
            self.expect(Tok::RParen, "')'")?;
        }
        let tensor_with = if self.peek().tok == Tok::Ident("tensor".into()) {
            self.bump();
            let (t, t_span) = self.parse_name("an algebra name")?;
            if !ws.algebras.contains_key(&t) {
                return Err(ParseError::UnknownReference {
                    name: t,
                    span: t_span,
                });
            }
            Some(t)
        } else {
            None
        };

        let validation = |message: String| ParseError::Validation {
            span: name_span,
            message,
        };
        let base: Arc<CahiersAlgebra> = match form {
            AlgebraForm::Weil => {
                let pres = Presentation::new(name.clone(), vars.clone(), rels.clone())
                    .map_err(validation)?;
                let w = is_weil(&pres).map_err(|e| validation(e.to_string()))?;
                CahiersAlgebra::from_weil(w)
            }
            AlgebraForm::Poly => {
                if !rels.is_empty() {
                    return Err(validation(
                        "a poly ring takes no relations; use the weil form".into(),
                    ));
                }
                CahiersAlgebra::free_ring(name.clone(), vars.clone()).map_err(validation)?
            }
        };
        let built = match &tensor_with {
            None => base,
            Some(t) => {
                let rhs = ws.algebras.get(t).unwrap();
                let (prod, _) = tensor(&base, rhs).map_err(|e| validation(e.to_string()))?;
                CahiersAlgebra::new(name.clone(), prod.free_variables.clone(), prod.weil.clone())
                    .map_err(validation)?
            }
        };

        ws.algebras.insert(name.clone(), built);
        ws.algebra_decls.insert(
            name.clone(),
            AlgebraDecl {
                name: name.clone(),
                form,
                ring_vars: vars,
                ring_rels: rels,
                tensor_with,
            },
        );
        ws.decl_order.push((DeclKind::Algebra, name));
        Ok(())
    }

    fn parse_morphism(&mut self, ws: &mut Workspace) -> Result<(), ParseError> {
        let (name, name_span) = self.parse_name("a morphism name")?;
        self.check_fresh(ws.morphisms.contains_key(&name), &name, name_span)?;
        self.expect(Tok::Colon, "':'")?;
        let (src_name, src_span) = self.parse_name("the source algebra")?;
        let source = ws
            .algebras
            .get(&src_name)
            .cloned()
            .ok_or(ParseError::UnknownReference {
                name: src_name.clone(),
                span: src_span,
            })?;
        self.expect(Tok::Arrow, "'->'")?;
        let (tgt_name, tgt_span) = self.parse_name("the target algebra")?;
        let target = ws
            .algebras
            .get(&tgt_name)
            .cloned()
            .ok_or(ParseError::UnknownReference {
                name: tgt_name.clone(),
                span: tgt_span,
            })?;
        self.expect(Tok::Equals, "'='")?;
        self.expect(Tok::LBrace, "'{'")?;

        let tvars: Vec<String> = target.vars().to_vec();
        let mut images: Vec<Option<Poly>> = vec![None; source.nvars()];
        loop {
            let (gen, gen_span) = self.expect_ident("a generator name")?;
            let idx = source.var_index(&gen).ok_or(ParseError::UnknownReference {
                name: gen.clone(),
                span: gen_span,
            })?;
            if images[idx].is_some() {
                return Err(ParseError::DuplicateName {
                    name: gen,
                    span: gen_span,
                });
            }
            self.expect(Tok::Arrow, "'->'")?;
            let e = self.parse_arith(false, Some(&tvars))?;
            images[idx] = Some(expr_to_poly(&e, &tvars, gen_span)?);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RBrace, "'}'")?;

        let mut resolved = Vec::with_capacity(images.len());
        for (i, img) in images.into_iter().enumerate() {
            match img {
                Some(p) => resolved.push(p),
                None => {
                    return Err(ParseError::Validation {
                        span: name_span,
                        message: format!(
                            "generator {} of {} has no image",
                            source.vars()[i],
                            src_name
                        ),
                    })
                }
            }
        }
        let m = check_morphism(name.clone(), source, target, resolved).map_err(|e| {
            ParseError::Validation {
                span: name_span,
                message: e.to_string(),
            }
        })?;
        ws.morphisms.insert(name.clone(), m);
        ws.decl_order.push((DeclKind::Morphism, name));
        Ok(())
    }

    fn parse_name_list(&mut self, what: &str) -> Result<Vec<(String, SourceSpan)>, ParseError> {
        let mut out = vec![self.parse_name(what)?];
        while self.eat(&Tok::Comma) {
            out.push(self.parse_name(what)?);
        }
        Ok(out)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let (word, span) = self.expect_ident(&format!("'{kw}:'"))?;
        if word != kw {
            return Err(ParseError::Syntax {
                span,
                expected: format!("'{kw}:', found {word}"),
            });
        }
        self.expect(Tok::Colon, "':'")?;
        Ok(())
    }

    fn parse_diagram(&mut self, ws: &mut Workspace) -> Result<(), ParseError> {
        let (name, name_span) = self.parse_name("a diagram name")?;
        self.check_fresh(ws.diagrams.contains_key(&name), &name, name_span)?;
        self.expect(Tok::Equals, "'='")?;
        self.expect(Tok::LBrace, "'{'")?;
        self.expect_keyword("nodes")?;
        let node_names = self.parse_name_list("an algebra name")?;
        self.expect(Tok::Semi, "';'")?;
        self.expect_keyword("arrows")?;
        let arrow_names = if self.peek().tok == Tok::RBrace {
            Vec::new()
        } else {
            self.parse_name_list("a morphism name")?
        };
        self.expect(Tok::RBrace, "'}'")?;

        let mut diagram = Diagram::new(name.clone());
        for (n, span) in &node_names {
            let alg = ws
                .algebras
                .get(n)
                .cloned()
                .ok_or(ParseError::UnknownReference {
                    name: n.clone(),
                    span: *span,
                })?;
            diagram
                .add_node(n.clone(), alg)
                .map_err(|e| ParseError::Validation {
                    span: *span,
                    message: e.to_string(),
                })?;
        }
        for (a, span) in &arrow_names {
            let m = ws
                .morphisms
                .get(a)
                .cloned()
                .ok_or(ParseError::UnknownReference {
                    name: a.clone(),
                    span: *span,
                })?;
            let from = diagram
                .node_index(&m.source.name)
                .ok_or(ParseError::Validation {
                    span: *span,
                    message: format!("source {} of arrow {} is not a node", m.source.name, a),
                })?;
            let to = diagram
                .node_index(&m.target.name)
                .ok_or(ParseError::Validation {
                    span: *span,
                    message: format!("target {} of arrow {} is not a node", m.target.name, a),
                })?;
            diagram
                .add_arrow(from, to, m)
                .map_err(|e| ParseError::Validation {
                    span: *span,
                    message: e.to_string(),
                })?;
        }
        ws.diagrams.insert(name.clone(), diagram);
        ws.decl_order.push((DeclKind::Diagram, name));
        Ok(())
    }

    fn parse_cone(&mut self, ws: &mut Workspace) -> Result<(), ParseError> {
        let (name, name_span) = self.parse_name("a cone name")?;
        self.check_fresh(ws.cones.contains_key(&name), &name, name_span)?;
        self.expect(Tok::Equals, "'='")?;
        self.expect(Tok::LBrace, "'{'")?;
        self.expect_keyword("apex")?;
        let (apex_name, apex_span) = self.parse_name("the apex algebra")?;
        let apex = ws
            .algebras
            .get(&apex_name)
            .cloned()
            .ok_or(ParseError::UnknownReference {
                name: apex_name.clone(),
                span: apex_span,
            })?;
        self.expect(Tok::Semi, "';'")?;
        self.expect_keyword("legs")?;
        let leg_names = self.parse_name_list("a morphism name")?;
        self.expect(Tok::RBrace, "'}'")?;

        let mut legs = Vec::new();
        for (l, span) in &leg_names {
            let m = ws
                .morphisms
                .get(l)
                .cloned()
                .ok_or(ParseError::UnknownReference {
                    name: l.clone(),
                    span: *span,
                })?;
            legs.push(m);
        }

        // Bind to the unique declared diagram this is a cone over: one leg
        // per node, matched by the leg's target algebra.
        let mut matches = Vec::new();
        for (dname, diagram) in &ws.diagrams {
            if legs.len() != diagram.nodes().len() {
                continue;
            }
            let mut ordered: Vec<Option<crate::algebra::Morphism>> =
                vec![None; diagram.nodes().len()];
            let mut used = vec![false; legs.len()];
            let mut ok = true;
            for (i, node) in diagram.nodes().iter().enumerate() {
                match legs.iter().enumerate().find(|(j, leg)| {
                    !used[*j] && *leg.target == *node.algebra && *leg.source == *apex
                }) {
                    Some((j, leg)) => {
                        used[j] = true;
                        ordered[i] = Some(leg.clone());
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let ordered: Vec<crate::algebra::Morphism> =
                ordered.into_iter().map(Option::unwrap).collect();
            if let Ok(cone) = Cone::new(name.clone(), diagram, apex.clone(), ordered) {
                matches.push((dname.clone(), cone));
            }
        }
        match matches.len() {
            0 => Err(ParseError::Validation {
                span: name_span,
                message: "the legs form a cone over no declared diagram".into(),
            }),
            1 => {
                let (diagram, cone) = matches.pop().unwrap();
                ws.cones.insert(
                    name.clone(),
                    ConeEntry {
                        cone,
                        diagram,
                        leg_names: leg_names.into_iter().map(|(n, _)| n).collect(),
                    },
                );
                ws.decl_order.push((DeclKind::Cone, name));
                Ok(())
            }
            _ => Err(ParseError::Validation {
                span: name_span,
                message: format!(
                    "ambiguous cone: fits diagrams {}",
                    matches
                        .iter()
                        .map(|(d, _)| d.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            }),
        }
    }

    fn parse_expr_decl(&mut self, ws: &mut Workspace) -> Result<(), ParseError> {
        let (name, name_span) = self.parse_name("an expression name")?;
        self.check_fresh(ws.expressions.contains_key(&name), &name, name_span)?;
        self.expect(Tok::LParen, "'('")?;
        let mut params = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                let (p, p_span) = self.expect_ident("a parameter name")?;
                if params.contains(&p) {
                    return Err(ParseError::DuplicateName {
                        name: p,
                        span: p_span,
                    });
                }
                params.push(p);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RParen, "')'")?;
        self.expect(Tok::Equals, "'='")?;
        let body = self.parse_arith(true, Some(&params))?;
        ws.expressions.insert(
            name.clone(),
            ExprDecl {
                name: name.clone(),
                params,
                body,
            },
        );
        ws.decl_order.push((DeclKind::Expr, name));
        Ok(())
    }

    /// Arithmetic over names and rational literals. With `allow_smooth`,
    /// function application and division are available; otherwise the
    /// grammar is the polynomial one (rational literals only). When `vars`
    /// is given, every name must be in it.
    fn parse_arith(
        &mut self,
        allow_smooth: bool,
        vars: Option<&[String]>,
    ) -> Result<SmoothExpr, ParseError> {
        let mut acc = self.parse_term(allow_smooth, vars)?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.parse_term(allow_smooth, vars)?;
                acc = SmoothExpr::Add(Box::new(acc), Box::new(rhs));
            } else if self.peek().tok == Tok::Minus {
                self.bump();
                let rhs = self.parse_term(allow_smooth, vars)?;
                acc = SmoothExpr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(
        &mut self,
        allow_smooth: bool,
        vars: Option<&[String]>,
    ) -> Result<SmoothExpr, ParseError> {
        let mut acc = self.parse_unary(allow_smooth, vars)?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.parse_unary(allow_smooth, vars)?;
                acc = SmoothExpr::Mul(Box::new(acc), Box::new(rhs));
            } else if self.peek().tok == Tok::Slash {
                let slash_span = self.peek().span;
                if !allow_smooth {
                    return Err(ParseError::Syntax {
                        span: slash_span,
                        expected: "'/' only inside rational literals here".into(),
                    });
                }
                self.bump();
                let rhs = self.parse_unary(allow_smooth, vars)?;
                // Constant folding for exact rational literals; division by
                // a zero literal stays deferred to evaluation.
                acc = match (&acc, &rhs) {
                    (SmoothExpr::Const(a), SmoothExpr::Const(b)) if !b.is_zero() => {
                        SmoothExpr::Const(a / b)
                    }
                    _ => SmoothExpr::Div(Box::new(acc), Box::new(rhs)),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_unary(
        &mut self,
        allow_smooth: bool,
        vars: Option<&[String]>,
    ) -> Result<SmoothExpr, ParseError> {
        if self.eat(&Tok::Minus) {
            let inner = self.parse_unary(allow_smooth, vars)?;
            return Ok(match inner {
                SmoothExpr::Const(r) => SmoothExpr::Const(-r),
                other => SmoothExpr::Neg(Box::new(other)),
            });
        }
        self.parse_power(allow_smooth, vars)
    }

    fn parse_power(
        &mut self,
        allow_smooth: bool,
        vars: Option<&[String]>,
    ) -> Result<SmoothExpr, ParseError> {
        let base = self.parse_primary(allow_smooth, vars)?;
        if self.eat(&Tok::Caret) {
            let span = self.peek().span;
            match &self.peek().tok {
                Tok::Int(s) => {
                    let k: u32 = s.parse().map_err(|_| ParseError::Syntax {
                        span,
                        expected: "a positive integer power".into(),
                    })?;
                    if k == 0 {
                        return Err(ParseError::Syntax {
                            span,
                            expected: "a positive integer power".into(),
                        });
                    }
                    self.bump();
                    return Ok(SmoothExpr::Pow(Box::new(base), k));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        span,
                        expected: "a positive integer power".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn parse_primary(
        &mut self,
        allow_smooth: bool,
        vars: Option<&[String]>,
    ) -> Result<SmoothExpr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(s) => {
                let int_span = self.peek().span;
                self.bump();
                let n: Rat = crate::scalar::parse_rat(&s).ok_or(ParseError::Syntax {
                    span: int_span,
                    expected: "an integer".into(),
                })?;
                // Rational literal INT/INT, folded at parse time.
                if self.peek().tok == Tok::Slash {
                    if let Tok::Int(d) = &self.peek2().tok {
                        let d = d.clone();
                        let denom_span = self.peek2().span;
                        let denom: Rat =
                            crate::scalar::parse_rat(&d).ok_or(ParseError::Syntax {
                                span: denom_span,
                                expected: "an integer".into(),
                            })?;
                        if denom.is_zero() {
                            if allow_smooth {
                                // Defer: division checked at evaluation.
                                return Ok(SmoothExpr::Const(n));
                            }
                            return Err(ParseError::Syntax {
                                span: denom_span,
                                expected: "a nonzero denominator".into(),
                            });
                        }
                        self.bump();
                        self.bump();
                        return Ok(SmoothExpr::Const(n / denom));
                    }
                }
                Ok(SmoothExpr::Const(n))
            }
            Tok::Ident(name) => {
                let span = self.peek().span;
                self.bump();
                if self.peek().tok == Tok::LParen {
                    if !allow_smooth {
                        return Err(ParseError::Syntax {
                            span: self.peek().span,
                            expected: "no function application in polynomials".into(),
                        });
                    }
                    let prim = Primitive::from_name(&name).ok_or(ParseError::UnknownFunction {
                        name: name.clone(),
                        span,
                    })?;
                    self.bump();
                    let arg = self.parse_arith(allow_smooth, vars)?;
                    self.expect(Tok::RParen, "')'")?;
                    return Ok(SmoothExpr::Apply(prim, Box::new(arg)));
                }
                if let Some(vars) = vars {
                    if !vars.iter().any(|v| v == &name) {
                        return Err(ParseError::UnknownReference { name, span });
                    }
                }
                Ok(SmoothExpr::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let e = self.parse_arith(allow_smooth, vars)?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(self.unexpected("a term")),
        }
    }
}

/// Lowers a validated arithmetic AST to a polynomial over `vars`.
fn expr_to_poly(e: &SmoothExpr, vars: &[String], span: SourceSpan) -> Result<Poly, ParseError> {
    let n = vars.len();
    Ok(match e {
        SmoothExpr::Var(v) => {
            let i = vars
                .iter()
                .position(|x| x == v)
                .ok_or(ParseError::UnknownReference {
                    name: v.clone(),
                    span,
                })?;
            Poly::var(n, i)
        }
        SmoothExpr::Const(r) => Poly::constant(n, r.clone()),
        SmoothExpr::Neg(a) => expr_to_poly(a, vars, span)?.neg(),
        SmoothExpr::Add(a, b) => expr_to_poly(a, vars, span)?.add(&expr_to_poly(b, vars, span)?),
        SmoothExpr::Sub(a, b) => expr_to_poly(a, vars, span)?.sub(&expr_to_poly(b, vars, span)?),
        SmoothExpr::Mul(a, b) => expr_to_poly(a, vars, span)?.mul(&expr_to_poly(b, vars, span)?),
        SmoothExpr::Pow(a, k) => expr_to_poly(a, vars, span)?.pow(*k),
        SmoothExpr::Div(..) | SmoothExpr::Apply(..) => {
            return Err(ParseError::Syntax {
                span,
                expected: "a polynomial (no division or function application)".into(),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    #[test]
    fn spec_square_algebra_example() {
        let ws = parse_file("algebra D2 = weil R[X,Y]/(X^2, Y^2, X*Y)").unwrap();
        let d2 = ws.algebra("D2").unwrap();
        assert_eq!(d2.weil.dimension, 3);
        let _ = CheckStatus::Pass;
    }

    #[test]
    fn empty_input_gives_prelude() {
        let ws = parse_file("").unwrap();
        assert!(ws.algebra("D").is_some());
        assert!(ws.algebra("D(2)").is_some());
        assert!(ws.algebra("ℝ").is_some());
        assert!(ws.morphism("phi").is_some());
        assert!(ws.morphism("aug_D(3)").is_some());
        assert!(ws.decl_order.is_empty());
    }

    #[test]
    fn fake_addition_rejected_with_residual() {
        let src = "algebra T = weil R[X,Y]/(X^2, Y^2)\nmorphism bad : D -> T = { X -> X + Y }";
        let err = parse_file(src).unwrap_err();
        match err {
            ParseError::Validation { message, span } => {
                assert!(message.contains("2*X*Y"), "{message}");
                assert_eq!(span.line, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn expression_grammar_echo() {
        let e = parse_expr("sin(x*y) + exp(x)").unwrap();
        assert_eq!(e.to_string(), "sin(x*y) + exp(x)");
        assert_eq!(parse_expr("x").unwrap(), SmoothExpr::var("x"));
        // Deferred division by zero parses.
        assert!(parse_expr("1/0").is_ok());
        // Folded rational literal.
        assert_eq!(
            parse_expr("3/4").unwrap(),
            SmoothExpr::Const(crate::scalar::ratq(3, 4))
        );
    }

    #[test]
    fn unknown_function_and_unknown_reference() {
        match parse_expr("tanh(x)").unwrap_err() {
            ParseError::UnknownFunction { name, .. } => assert_eq!(name, "tanh"),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_file("morphism f : D -> Nowhere = { X -> 0 }").unwrap_err();
        assert!(matches!(err, ParseError::UnknownReference { .. }));
    }

    #[test]
    fn parenthesized_names_resolve() {
        let src = "morphism again : D(2) -> D = { X -> X, Y -> X }";
        let ws = parse_file(src).unwrap();
        assert!(ws.morphism("again").is_some());
    }

    #[test]
    fn diagram_and_cone_bind() {
        let src = "\
algebra Dc = weil R[X]/(X^2)
morphism aug_Dc : Dc -> R = { X -> 0 }
morphism pr2c : D(2) -> Dc = { X -> 0, Y -> X }
diagram pb = { nodes: D, Dc, R; arrows: aug_D, aug_Dc }
cone c = { apex: D(2); legs: pr1, pr2c, aug_D(2) }
";
        let ws = parse_file(src).unwrap();
        let entry = ws.cone("c").unwrap();
        assert_eq!(entry.diagram, "pb");
        assert_eq!(ws.diagram("pb").unwrap().arrows().len(), 2);
    }

    #[test]
    fn expr_decl_checks_parameters() {
        assert!(parse_file("expr f(x, y) = x*y + sin(x)").is_ok());
        let err = parse_file("expr f(x) = x + y").unwrap_err();
        assert!(matches!(err, ParseError::UnknownReference { name, .. } if name == "y"));
    }

    #[test]
    fn implicit_multiplication_is_one_identifier() {
        // XY is a single (unknown) identifier, not X*Y.
        let err = parse_file("algebra B = weil R[X,Y]/(XY)").unwrap_err();
        assert!(matches!(err, ParseError::UnknownReference { name, .. } if name == "XY"));
    }

    #[test]
    fn error_spans_stay_in_bounds() {
        for src in [
            "algebra",
            "algebra A",
            "algebra A = weil R[X]/(X^2) junk more",
            "morphism f : D -> D = { X -> }",
            "diagram d = { nodes: D; arrows: }",
            "expr e() = ",
            "algebra A = weil R[X]/(1)",
        ] {
            if let Err(e) = parse_file(src) {
                let span = e.span();
                let lines: Vec<&str> = src.lines().collect();
                assert!(span.line >= 1 && span.line <= lines.len().max(1), "{src}");
                let line_len = lines
                    .get(span.line - 1)
                    .map(|l| l.chars().count())
                    .unwrap_or(0);
                assert!(
                    span.column >= 1 && span.column <= line_len + 2,
                    "{src}: {span:?}"
                );
            }
        }
    }
}
