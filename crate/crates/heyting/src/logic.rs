//! Propositional formulas over `&`, `|`, `->`, `~` and the constants `0`,
//! `1`: parsing, evaluation, validity with a countermodel search,
//! characteristic formulas of finite subdirectly irreducible algebras, and
//! the decision procedure for primitivity of an axiomatized variety
//! (equivalently, hereditary structural completeness of the axiomatized
//! logic).

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::catalog;
use crate::kernel::{ElementId, HeytingAlgebra};
use crate::search;
use crate::structure;

/// Default cap on connective evaluations per validity query.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("valuation search budget of {budget} evaluations exceeded{}",
            context.as_deref().map(|c| format!(" ({c})")).unwrap_or_default())]
    SearchBudgetExceeded { budget: u64, context: Option<String> },
    #[error("characteristic formulas require a subdirectly irreducible algebra")]
    NotSubdirectlyIrreducible,
    #[error("valuation does not bind variable {0}")]
    UnboundVariable(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Formula {
    Var(String),
    Bot,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Box::new(a))
    }
    /// `(a -> b) & (b -> a)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// The distinct variables, sorted by name.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Var(v) => out.push(v.clone()),
            Formula::Bot | Formula::Top => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Neg(a) => a.collect_vars(out),
        }
    }
}

/// Applies a substitution; variables outside the map stay themselves.
pub fn substitute(f: &Formula, map: &BTreeMap<String, Formula>) -> Formula {
    match f {
        Formula::Var(v) => map.get(v).cloned().unwrap_or_else(|| f.clone()),
        Formula::Bot | Formula::Top => f.clone(),
        Formula::And(a, b) => Formula::and(substitute(a, map), substitute(b, map)),
        Formula::Or(a, b) => Formula::or(substitute(a, map), substitute(b, map)),
        Formula::Imp(a, b) => Formula::imp(substitute(a, map), substitute(b, map)),
        Formula::Neg(a) => Formula::neg(substitute(a, map)),
    }
}

/// Balanced conjunction of a list; empty list gives `1`.
pub fn conjunction(mut parts: Vec<Formula>) -> Formula {
    match parts.len() {
        0 => Formula::Top,
        1 => parts.pop().unwrap(),
        n => {
            let right = conjunction(parts.split_off(n / 2));
            let left = conjunction(parts);
            Formula::and(left, right)
        }
    }
}

// display with minimal parentheses: ~ binds tighter than &, then |, then ->
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(f: &Formula) -> u8 {
            match f {
                Formula::Imp(..) => 1,
                Formula::Or(..) => 2,
                Formula::And(..) => 3,
                _ => 4,
            }
        }
        fn go(f: &Formula, min: u8, w: &mut fmt::Formatter<'_>) -> fmt::Result {
            let p = prec(f);
            let paren = p < min;
            if paren {
                write!(w, "(")?;
            }
            match f {
                Formula::Var(v) => write!(w, "{v}")?,
                Formula::Bot => write!(w, "0")?,
                Formula::Top => write!(w, "1")?,
                Formula::Neg(a) => {
                    write!(w, "~")?;
                    go(a, 4, w)?;
                }
                Formula::And(a, b) => {
                    // left-associative: right child needs parentheses at
                    // equal precedence
                    go(a, 3, w)?;
                    write!(w, " & ")?;
                    go(b, 4, w)?;
                }
                Formula::Or(a, b) => {
                    go(a, 2, w)?;
                    write!(w, " | ")?;
                    go(b, 3, w)?;
                }
                Formula::Imp(a, b) => {
                    // right-associative
                    go(a, 2, w)?;
                    write!(w, " -> ")?;
                    go(b, 1, w)?;
                }
            }
            if paren {
                write!(w, ")")?;
            }
            Ok(())
        }
        go(self, 1, f)
    }
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, LogicError> {
        Err(LogicError::SyntaxError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    // formula := imp ; imp := or [ "->" imp ]
    fn imp(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.or()?;
        if self.eat("->") {
            let rhs = self.imp()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.and()?;
        while self.peek() == Some(b'|') {
            self.pos += 1;
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.neg()?;
        while self.peek() == Some(b'&') {
            self.pos += 1;
            acc = Formula::and(acc, self.neg()?);
        }
        Ok(acc)
    }

    fn neg(&mut self) -> Result<Formula, LogicError> {
        if self.peek() == Some(b'~') {
            self.pos += 1;
            Ok(Formula::neg(self.neg()?))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.imp()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    self.err("expected ')'")
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|&c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                Ok(Formula::var(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap(),
                ))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the formula grammar: `->` is right-associative, `~` binds tighter
/// than `&`, which binds tighter than `|`, which binds tighter than `->`.
pub fn parse(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let f = p.imp()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses an axiom file: one formula per line, `#` comments, blank lines
/// ignored.
pub fn parse_axiom_file(text: &str) -> Result<Vec<Formula>, LogicError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse(line)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// evaluation and validity
// ---------------------------------------------------------------------------

/// A total assignment of algebra elements to variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    assign: BTreeMap<String, ElementId>,
}

impl Valuation {
    pub fn new() -> Self {
        Valuation { assign: BTreeMap::new() }
    }

    pub fn bind(mut self, var: impl Into<String>, value: ElementId) -> Self {
        self.assign.insert(var.into(), value);
        self
    }

    pub fn get(&self, var: &str) -> Option<ElementId> {
        self.assign.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, ElementId)> {
        self.assign.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

impl Default for Valuation {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Evaluates a formula under a valuation.
pub fn eval(
    alg: &HeytingAlgebra,
    f: &Formula,
    val: &Valuation,
) -> Result<ElementId, LogicError> {
    let mut budget = u64::MAX;
    eval_counted(alg, f, &|v| val.get(v), &mut budget)
}

fn eval_counted(
    alg: &HeytingAlgebra,
    f: &Formula,
    lookup: &dyn Fn(&str) -> Option<ElementId>,
    budget: &mut u64,
) -> Result<ElementId, LogicError> {
    if *budget == 0 {
        return Err(LogicError::SearchBudgetExceeded { budget: 0, context: None });
    }
    *budget -= 1;
    match f {
        Formula::Var(v) => {
            lookup(v).ok_or_else(|| LogicError::UnboundVariable(v.clone()))
        }
        Formula::Bot => Ok(alg.bottom()),
        Formula::Top => Ok(alg.top()),
        Formula::And(a, b) => {
            let x = eval_counted(alg, a, lookup, budget)?;
            if x == alg.bottom() {
                return Ok(x);
            }
            Ok(alg.meet(x, eval_counted(alg, b, lookup, budget)?))
        }
        Formula::Or(a, b) => {
            let x = eval_counted(alg, a, lookup, budget)?;
            if x == alg.top() {
                return Ok(x);
            }
            Ok(alg.join(x, eval_counted(alg, b, lookup, budget)?))
        }
        Formula::Imp(a, b) => {
            let x = eval_counted(alg, a, lookup, budget)?;
            if x == alg.bottom() {
                return Ok(alg.top());
            }
            Ok(alg.imp(x, eval_counted(alg, b, lookup, budget)?))
        }
        Formula::Neg(a) => Ok(alg.neg(eval_counted(alg, a, lookup, budget)?)),
    }
}

/// Searches every valuation of `f` in `a`; `None` means the formula is
/// valid, otherwise the lexicographically least countervaluation (variables
/// in name order, element ids ascending) is returned.
pub fn is_valid(a: &HeytingAlgebra, f: &Formula) -> Result<Option<Valuation>, LogicError> {
    is_valid_with_budget(a, f, DEFAULT_BUDGET)
}

pub fn is_valid_with_budget(
    a: &HeytingAlgebra,
    f: &Formula,
    budget: u64,
) -> Result<Option<Valuation>, LogicError> {
    let vars = f.variables();
    let n = a.size() as u32;
    let mut counter = vec![0u32; vars.len()];
    let mut remaining = budget;
    loop {
        let lookup = |name: &str| {
            vars.binary_search_by(|v| v.as_str().cmp(name))
                .ok()
                .map(|i| ElementId(counter[i]))
        };
        let value = eval_counted(a, f, &lookup, &mut remaining).map_err(|e| match e {
            LogicError::SearchBudgetExceeded { .. } => {
                LogicError::SearchBudgetExceeded { budget, context: None }
            }
            other => other,
        })?;
        if value != a.top() {
            let mut val = Valuation::new();
            for (i, v) in vars.iter().enumerate() {
                val = val.bind(v.clone(), ElementId(counter[i]));
            }
            return Ok(Some(val));
        }
        // odometer, last variable fastest: tuples appear in lexicographic
        // order of (v1, v2, ...)
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            counter[i] += 1;
            if counter[i] < n {
                break;
            }
            counter[i] = 0;
        }
    }
}

/// A rule is derivable in the logic of `a` when the implication from the
/// conjunction of its premises to its conclusion is valid in `a`.
pub fn rule_derivable(
    premises: &[Formula],
    conclusion: &Formula,
    a: &HeytingAlgebra,
) -> Result<bool, LogicError> {
    rule_derivable_with_budget(premises, conclusion, a, DEFAULT_BUDGET)
}

pub fn rule_derivable_with_budget(
    premises: &[Formula],
    conclusion: &Formula,
    a: &HeytingAlgebra,
    budget: u64,
) -> Result<bool, LogicError> {
    let f = if premises.is_empty() {
        conclusion.clone()
    } else {
        Formula::imp(conjunction(premises.to_vec()), conclusion.clone())
    };
    Ok(is_valid_with_budget(a, &f, budget)?.is_none())
}

// ---------------------------------------------------------------------------
// characteristic formulas
// ---------------------------------------------------------------------------

fn element_var(x: ElementId) -> String {
    format!("p{x}")
}

/// The diagram of `a`: for every ordered pair, the biconditionals tying the
/// variable of each operation result to the operation applied to the
/// variables, plus `p_bottom <-> 0`.
fn diagram(a: &HeytingAlgebra) -> Formula {
    let v = |x: ElementId| Formula::var(element_var(x));
    let mut parts = Vec::new();
    for x in a.elements() {
        for y in a.elements() {
            parts.push(Formula::iff(v(a.meet(x, y)), Formula::and(v(x), v(y))));
            parts.push(Formula::iff(v(a.join(x, y)), Formula::or(v(x), v(y))));
            parts.push(Formula::iff(v(a.imp(x, y)), Formula::imp(v(x), v(y))));
        }
    }
    parts.push(Formula::iff(v(a.bottom()), Formula::Bot));
    conjunction(parts)
}

/// The characteristic formula of a finite subdirectly irreducible algebra:
/// the full diagram implying the variable of the unique coatom. Its validity
/// in `B` is equivalent (tested, not assumed) to `a` lying outside the
/// variety generated by `B`.
pub fn jankov_formula(a: &HeytingAlgebra) -> Result<Formula, LogicError> {
    let s = unique_coatom(a)?;
    Ok(Formula::imp(diagram(a), Formula::var(element_var(s))))
}

fn unique_coatom(a: &HeytingAlgebra) -> Result<ElementId, LogicError> {
    if structure::is_si(a) != Ok(true) {
        return Err(LogicError::NotSubdirectlyIrreducible);
    }
    Ok(structure::coatoms(a)[0])
}

/// Decides validity of the characteristic formula of `a` in `b` without the
/// full mixed-radix scan: a countervaluation exists exactly when some
/// principal quotient of `b` admits a homomorphism from `a` that keeps the
/// coatom away from the top, and any such homomorphism lifts to a
/// countervaluation by taking the largest representative of each class.
///
/// The returned valuation is a genuine countervaluation in `b` itself; it is
/// re-checked by direct evaluation before being returned.
pub fn jankov_valid(
    b: &HeytingAlgebra,
    a: &HeytingAlgebra,
) -> Result<Option<Valuation>, LogicError> {
    let s = unique_coatom(a)?;
    for g in b.elements() {
        let quotient = structure::ideal_algebra(b, g);
        let universe = structure::ideal_universe(b, g);
        let forbidden = [(s, quotient.top())];
        let Some(h) = search::homomorphism_avoiding(a, &quotient, &forbidden) else {
            continue;
        };
        // lift: class of c in the ideal has greatest representative g -> c
        let mut val = Valuation::new();
        for x in a.elements() {
            let rep = b.imp(g, universe[h[x.index()].index()]);
            val = val.bind(element_var(x), rep);
        }
        let e = jankov_formula(a)?;
        let witness = eval(b, &e, &val)?;
        assert_ne!(witness, b.top(), "lifted valuation must refute the formula");
        return Ok(Some(val));
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// the decision procedure
// ---------------------------------------------------------------------------

/// Per-algebra outcome of the primitivity check.
#[derive(Clone, Debug)]
pub enum AlgebraOutcome {
    /// Some axiom fails in this algebra; the countervaluation is recorded.
    Refutes { axiom: usize, countervaluation: Valuation },
    /// Every axiom is valid here, so this algebra is a model.
    Model,
}

#[derive(Clone, Debug)]
pub struct AlgebraReport {
    pub name: &'static str,
    pub outcome: AlgebraOutcome,
}

/// Verdict of [`decide_primitive`], with one report per tested algebra.
#[derive(Clone, Debug)]
pub struct PrimitiveVerdict {
    pub primitive: bool,
    pub reports: Vec<AlgebraReport>,
}

/// Decides whether the variety of Heyting algebras axiomatized by the given
/// formulas (each asserted equal to `1`) is primitive, equivalently whether
/// the axiomatized logic is hereditarily structurally complete: it is
/// exactly when each of the five prohibited algebras refutes some axiom.
pub fn decide_primitive(axioms: &[Formula]) -> Result<PrimitiveVerdict, LogicError> {
    decide_primitive_with_budget(axioms, DEFAULT_BUDGET)
}

pub fn decide_primitive_with_budget(
    axioms: &[Formula],
    budget: u64,
) -> Result<PrimitiveVerdict, LogicError> {
    let mut reports = Vec::new();
    for i in 1..=5 {
        reports.push(prohibited_report(i, axioms, budget)?);
    }
    Ok(assemble_verdict(reports))
}

/// Checks the axioms against the `i`-th prohibited algebra. The per-algebra
/// checks are independent, so callers may fan them out to workers and
/// assemble the verdict afterwards.
pub fn prohibited_report(
    i: usize,
    axioms: &[Formula],
    budget: u64,
) -> Result<AlgebraReport, LogicError> {
    let p = catalog::prohibited(i).expect("index in range");
    let name = ["P1", "P2", "P3", "P4", "P5"][i - 1];
    let mut outcome = AlgebraOutcome::Model;
    for (ax, f) in axioms.iter().enumerate() {
        let refutation = is_valid_with_budget(&p, f, budget).map_err(|e| match e {
            LogicError::SearchBudgetExceeded { budget, .. } => {
                LogicError::SearchBudgetExceeded {
                    budget,
                    context: Some(format!("algebra {name}, axiom {ax}")),
                }
            }
            other => other,
        })?;
        if let Some(countervaluation) = refutation {
            outcome = AlgebraOutcome::Refutes { axiom: ax, countervaluation };
            break;
        }
    }
    Ok(AlgebraReport { name, outcome })
}

/// The verdict is true exactly when every report refutes some axiom.
pub fn assemble_verdict(reports: Vec<AlgebraReport>) -> PrimitiveVerdict {
    let primitive = reports
        .iter()
        .all(|r| matches!(r.outcome, AlgebraOutcome::Refutes { .. }));
    PrimitiveVerdict { primitive, reports }
}

/// Whether `a` satisfies every axiom in the list.
pub fn is_model(a: &HeytingAlgebra, axioms: &[Formula]) -> Result<bool, LogicError> {
    for f in axioms {
        if is_valid(a, f)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
