//! Lattice terms and identities, checked by exhaustive assignment, plus
//! the classical structural predicates (modularity, distributivity,
//! complementation, selfduality) with two independent decision routes.

use crate::error::{Error, Result};
use crate::lattice::{ElemId, FiniteLattice};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

impl Term {
    pub fn eval(&self, l: &FiniteLattice, assignment: &[ElemId]) -> ElemId {
        match self {
            Term::Var(i) => assignment[*i],
            Term::Meet(a, b) => l.meet(a.eval(l, assignment), b.eval(l, assignment)),
            Term::Join(a, b) => l.join(a.eval(l, assignment), b.eval(l, assignment)),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Meet(a, b) | Term::Join(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Meet(a, b) | Term::Join(a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Swaps meets and joins throughout.
    pub fn dual(&self) -> Term {
        match self {
            Term::Var(i) => Term::Var(*i),
            Term::Meet(a, b) => Term::Join(Box::new(a.dual()), Box::new(b.dual())),
            Term::Join(a, b) => Term::Meet(Box::new(a.dual()), Box::new(b.dual())),
        }
    }

    fn fmt_with(&self, names: &[String], out: &mut String) {
        match self {
            Term::Var(i) => out.push_str(&names[*i]),
            Term::Meet(a, b) | Term::Join(a, b) => {
                out.push('(');
                out.push_str(if matches!(self, Term::Meet(..)) { "meet " } else { "join " });
                a.fmt_with(names, out);
                out.push(' ');
                b.fmt_with(names, out);
                out.push(')');
            }
        }
    }
}

/// An equation between two lattice terms over shared variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub var_names: Vec<String>,
}

impl Identity {
    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn dual(&self) -> Identity {
        Identity {
            lhs: self.lhs.dual(),
            rhs: self.rhs.dual(),
            var_names: self.var_names.clone(),
        }
    }

    /// x ∧ (y ∨ (x ∧ z)) = (x ∧ y) ∨ (x ∧ z)
    pub fn modular_law() -> Identity {
        Identity::parse("(= (meet x (join y (meet x z))) (join (meet x y) (meet x z)))")
            .expect("fixed law parses")
    }

    /// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)
    pub fn distributive_law() -> Identity {
        Identity::parse("(= (meet x (join y z)) (join (meet x y) (meet x z)))")
            .expect("fixed law parses")
    }

    /// Parses the prefix syntax `(= term term)` where a term is a variable
    /// name or `(meet t t)` / `(join t t)`. Variables are indexed in order
    /// of first appearance.
    pub fn parse(src: &str) -> Result<Identity> {
        let mut tokens: Vec<String> = Vec::new();
        let mut cur = String::new();
        for ch in src.chars() {
            match ch {
                '(' | ')' => {
                    if !cur.is_empty() {
                        tokens.push(std::mem::take(&mut cur));
                    }
                    tokens.push(ch.to_string());
                }
                c if c.is_whitespace() => {
                    if !cur.is_empty() {
                        tokens.push(std::mem::take(&mut cur));
                    }
                }
                c => cur.push(c),
            }
        }
        if !cur.is_empty() {
            tokens.push(cur);
        }
        let mut pos = 0usize;
        let mut names: Vec<String> = Vec::new();

        fn expect(tokens: &[String], pos: &mut usize, what: &str) -> Result<()> {
            if tokens.get(*pos).map(String::as_str) == Some(what) {
                *pos += 1;
                Ok(())
            } else {
                Err(Error::Format(format!(
                    "expected `{what}` at token {} of the identity",
                    *pos + 1
                )))
            }
        }

        fn term(tokens: &[String], pos: &mut usize, names: &mut Vec<String>) -> Result<Term> {
            match tokens.get(*pos).map(String::as_str) {
                Some("(") => {
                    *pos += 1;
                    let op = tokens
                        .get(*pos)
                        .ok_or_else(|| Error::Format("unterminated term".to_string()))?
                        .clone();
                    *pos += 1;
                    let a = term(tokens, pos, names)?;
                    let b = term(tokens, pos, names)?;
                    expect(tokens, pos, ")")?;
                    match op.as_str() {
                        "meet" => Ok(Term::Meet(Box::new(a), Box::new(b))),
                        "join" => Ok(Term::Join(Box::new(a), Box::new(b))),
                        other => Err(Error::Format(format!(
                            "unknown operator `{other}`, expected meet or join"
                        ))),
                    }
                }
                Some(")") | None => Err(Error::Format("expected a term".to_string())),
                Some(name) if name == "=" || name == "meet" || name == "join" => Err(
                    Error::Format(format!("`{name}` cannot be used as a variable")),
                ),
                Some(name) => {
                    let idx = match names.iter().position(|n| n == name) {
                        Some(i) => i,
                        None => {
                            names.push(name.to_string());
                            names.len() - 1
                        }
                    };
                    *pos += 1;
                    Ok(Term::Var(idx))
                }
            }
        }

        expect(&tokens, &mut pos, "(")?;
        expect(&tokens, &mut pos, "=")?;
        let lhs = term(&tokens, &mut pos, &mut names)?;
        let rhs = term(&tokens, &mut pos, &mut names)?;
        expect(&tokens, &mut pos, ")")?;
        if pos != tokens.len() {
            return Err(Error::Format("trailing input after the identity".to_string()));
        }
        Ok(Identity { lhs, rhs, var_names: names })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::from("(= ");
        self.lhs.fmt_with(&self.var_names, &mut out);
        out.push(' ');
        self.rhs.fmt_with(&self.var_names, &mut out);
        out.push(')');
        f.write_str(&out)
    }
}

/// Outcome of checking an identity: either it holds everywhere, or the
/// lexicographically first failing assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HoldsOutcome {
    Holds,
    Fails(Vec<ElemId>),
}

impl HoldsOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, HoldsOutcome::Holds)
    }

    pub fn counterexample(&self) -> Option<&[ElemId]> {
        match self {
            HoldsOutcome::Holds => None,
            HoldsOutcome::Fails(a) => Some(a),
        }
    }
}

pub const DEFAULT_EVAL_BUDGET: u128 = 100_000_000;

/// Evaluates the identity under every assignment of its variables,
/// in lexicographic order, stopping at the first violation.
pub fn holds_in(l: &FiniteLattice, identity: &Identity) -> Result<HoldsOutcome> {
    holds_in_with_budget(l, identity, DEFAULT_EVAL_BUDGET)
}

pub fn holds_in_with_budget(
    l: &FiniteLattice,
    identity: &Identity,
    budget: u128,
) -> Result<HoldsOutcome> {
    let k = identity.num_vars();
    let referenced = identity.lhs.max_var().max(identity.rhs.max_var());
    if let Some(top) = referenced {
        if top >= k {
            return Err(Error::IndexOutOfRange(top));
        }
    }
    let n = l.size() as u128;
    let assignments = n.checked_pow(k as u32).unwrap_or(u128::MAX);
    let per_assignment =
        (identity.lhs.node_count() + identity.rhs.node_count()) as u128;
    let cost = assignments.saturating_mul(per_assignment);
    if cost > budget {
        return Err(Error::BudgetExceeded(cost));
    }
    if k == 0 {
        let empty: Vec<ElemId> = Vec::new();
        return Ok(if identity.lhs.eval(l, &empty) == identity.rhs.eval(l, &empty) {
            HoldsOutcome::Holds
        } else {
            HoldsOutcome::Fails(empty)
        });
    }
    let mut assignment = vec![0 as ElemId; k];
    loop {
        if identity.lhs.eval(l, &assignment) != identity.rhs.eval(l, &assignment) {
            return Ok(HoldsOutcome::Fails(assignment));
        }
        // odometer with the last variable fastest keeps lexicographic order
        let Some(pos) = (0..k).rev().find(|&i| assignment[i] + 1 < l.size()) else {
            return Ok(HoldsOutcome::Holds);
        };
        assignment[pos] += 1;
        for x in assignment.iter_mut().skip(pos + 1) {
            *x = 0;
        }
    }
}

/// Modularity via pentagon search: a lattice is modular exactly when no
/// pair x < z admits a y with equal meets and joins against both.
pub fn is_modular(l: &FiniteLattice) -> bool {
    let n = l.size();
    for x in 0..n {
        for z in 0..n {
            if !l.lt(x, z) {
                continue;
            }
            for y in 0..n {
                if l.comparable(x, y) || l.comparable(z, y) {
                    continue;
                }
                if l.meet(x, y) == l.meet(z, y) && l.join(x, y) == l.join(z, y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Distributivity via forbidden-sublattice search: distributive means no
/// pentagon and no diamond.
pub fn is_distributive(l: &FiniteLattice) -> bool {
    if !is_modular(l) {
        return false;
    }
    let n = l.size();
    for x in 0..n {
        for y in x + 1..n {
            if l.comparable(x, y) {
                continue;
            }
            let (m, j) = (l.meet(x, y), l.join(x, y));
            for z in y + 1..n {
                if l.comparable(x, z) || l.comparable(y, z) {
                    continue;
                }
                if l.meet(x, z) == m && l.meet(y, z) == m && l.join(x, z) == j && l.join(y, z) == j
                {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_complemented(l: &FiniteLattice) -> bool {
    let (b, t) = (l.bottom(), l.top());
    (0..l.size())
        .all(|x| (0..l.size()).any(|y| l.meet(x, y) == b && l.join(x, y) == t))
}

/// Every interval is complemented: for x in [a, b] some y in [a, b] has
/// x ∧ y = a and x ∨ y = b.
pub fn is_relatively_complemented(l: &FiniteLattice) -> bool {
    let n = l.size();
    for a in 0..n {
        for b in 0..n {
            if !l.leq(a, b) {
                continue;
            }
            for x in 0..n {
                if !(l.leq(a, x) && l.leq(x, b)) {
                    continue;
                }
                let found = (0..n).any(|y| {
                    l.leq(a, y) && l.leq(y, b) && l.meet(x, y) == a && l.join(x, y) == b
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// True when the lattice admits an order-reversing bijection onto itself.
pub fn is_selfdual(l: &FiniteLattice) -> bool {
    crate::autgroup::are_isomorphic(l, &l.dual())
}

/// The same identity evaluated in two lattices and in their glued sum; the
/// sum satisfies it exactly when both parts do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub in_first: bool,
    pub in_second: bool,
    pub in_sum: bool,
}

impl TransferReport {
    /// The equivalence the construction guarantees.
    pub fn consistent(&self) -> bool {
        self.in_sum == (self.in_first && self.in_second)
    }
}

pub fn identity_transfer_check(
    a: &FiniteLattice,
    b: &FiniteLattice,
    identity: &Identity,
) -> Result<TransferReport> {
    let sum = crate::construct::glued_sum(a, b);
    let report = TransferReport {
        in_first: holds_in(a, identity)?.holds(),
        in_second: holds_in(b, identity)?.holds(),
        in_sum: holds_in(&sum, identity)?.holds(),
    };
    debug_assert!(report.consistent());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::w_gadget;
    use crate::gf::sub_lattice;
    use crate::lattice::{boolean, chain, hexagon, m3, n5, FiniteLattice};

    fn corpus() -> Vec<FiniteLattice> {
        vec![
            chain(1),
            chain(4),
            boolean(2),
            boolean(3),
            m3(),
            n5(),
            hexagon(),
            sub_lattice(2, 2).unwrap(),
            sub_lattice(3, 2).unwrap(),
            w_gadget(&m3()),
        ]
    }

    #[test]
    fn parser_round_trips_and_rejects_garbage() {
        let src = "(= (meet x (join y z)) (join (meet x y) (meet x z)))";
        let id = Identity::parse(src).unwrap();
        assert_eq!(id.num_vars(), 3);
        assert_eq!(id.var_names, ["x", "y", "z"]);
        assert_eq!(id.to_string(), src);
        let again = Identity::parse(&id.to_string()).unwrap();
        assert_eq!(again, id);

        for bad in [
            "",
            "(= x)",
            "(= x y z)",
            "(= (and x y) x)",
            "(= (meet x) x)",
            "(= x y) trailing",
            "(= (meet x y) (join x y)",
        ] {
            assert!(
                matches!(Identity::parse(bad), Err(Error::Format(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn commutativity_holds_everywhere() {
        let id = Identity::parse("(= (meet x y) (meet y x))").unwrap();
        for l in corpus() {
            assert!(holds_in(&l, &id).unwrap().holds());
        }
    }

    #[test]
    fn modular_law_fails_in_the_pentagon_with_lex_first_witness() {
        let l = n5();
        let outcome = holds_in(&l, &Identity::modular_law()).unwrap();
        let cex = outcome.counterexample().expect("pentagon is not modular");
        let labels: Vec<String> =
            cex.iter().map(|&x| l.label(x).to_string()).collect();
        assert_eq!(labels, ["c", "b", "a"]);
    }

    #[test]
    fn modular_law_holds_in_subspace_lattices() {
        assert!(holds_in(&sub_lattice(2, 3).unwrap(), &Identity::modular_law())
            .unwrap()
            .holds());
    }

    #[test]
    fn diamond_fails_distributivity() {
        assert!(!holds_in(&m3(), &Identity::distributive_law()).unwrap().holds());
        assert!(holds_in(&m3(), &Identity::modular_law()).unwrap().holds());
    }

    #[test]
    fn sublattice_route_agrees_with_identity_route() {
        for l in corpus() {
            let modular_by_terms =
                holds_in(&l, &Identity::modular_law()).unwrap().holds();
            let distributive_by_terms =
                holds_in(&l, &Identity::distributive_law()).unwrap().holds();
            assert_eq!(is_modular(&l), modular_by_terms);
            assert_eq!(is_distributive(&l), distributive_by_terms);
            if distributive_by_terms {
                assert!(modular_by_terms);
            }
        }
    }

    #[test]
    fn subspace_lattices_are_modular_not_distributive() {
        for (p, n) in [(2u64, 2usize), (2, 3), (3, 2), (3, 3)] {
            let l = sub_lattice(p, n).unwrap();
            assert!(is_modular(&l));
            if n >= 2 {
                assert!(!is_distributive(&l));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let id = Identity::parse(
            "(= (meet a (meet b (meet c (meet d e)))) (meet e (meet d (meet c (meet b a)))))",
        )
        .unwrap();
        let l = sub_lattice(2, 4).unwrap(); // 67^5 assignments is too many
        assert!(matches!(
            holds_in(&l, &id),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn complementation_predicates() {
        assert!(is_complemented(&boolean(3)));
        assert!(is_complemented(&n5()));
        assert!(!is_complemented(&chain(3)));

        assert!(is_relatively_complemented(&sub_lattice(2, 3).unwrap()));
        assert!(is_relatively_complemented(&boolean(3)));
        assert!(!is_relatively_complemented(&w_gadget(&m3())));
        assert!(!is_relatively_complemented(&chain(3)));
        assert!(!is_relatively_complemented(&hexagon()));
    }

    #[test]
    fn selfduality() {
        assert!(is_selfdual(&n5()));
        assert!(is_selfdual(&m3()));
        assert!(is_selfdual(&hexagon()));
        assert!(is_selfdual(&chain(4)));
        assert!(is_selfdual(&boolean(3)));
        let lopsided = FiniteLattice::build_from_covers(
            &["0", "a", "b", "1", "t"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1"), ("1", "t")],
        )
        .unwrap();
        assert!(!is_selfdual(&lopsided));
    }

    #[test]
    fn identities_transfer_through_glued_sums() {
        let distributive = Identity::distributive_law();
        let modular = Identity::modular_law();

        let r = identity_transfer_check(&chain(2), &m3(), &distributive).unwrap();
        assert_eq!((r.in_first, r.in_second, r.in_sum), (true, false, false));
        assert!(r.consistent());

        let r = identity_transfer_check(&m3(), &m3(), &modular).unwrap();
        assert_eq!((r.in_first, r.in_second, r.in_sum), (true, true, true));

        let r = identity_transfer_check(&n5(), &chain(2), &modular).unwrap();
        assert_eq!((r.in_first, r.in_second, r.in_sum), (false, true, false));
    }

    #[test]
    fn duality_swaps_counterexamples() {
        for l in corpus() {
            for id in [Identity::modular_law(), Identity::distributive_law()] {
                let here = holds_in(&l, &id).unwrap().holds();
                let there = holds_in(&l.dual(), &id.dual()).unwrap().holds();
                assert_eq!(here, there);
            }
        }
    }
}
