//! Tarskian evaluation on finite multiplication tables.

use crate::error::LogicError;
use crate::logic::formula::{Formula, Term};
use crate::logic::table::FiniteGroupTable;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Evaluates formulas by nested iteration with short-circuiting. Every
/// atom evaluation and every quantifier instance costs one unit of budget.
pub struct Evaluator<'a> {
    table: &'a FiniteGroupTable,
    budget: u64,
    used: u64,
}

impl<'a> Evaluator<'a> {
    pub fn new(table: &'a FiniteGroupTable, budget: u64) -> Evaluator<'a> {
        Evaluator { table, budget, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn spend(&mut self) -> Result<(), LogicError> {
        self.used += 1;
        if self.used > self.budget {
            Err(LogicError::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    fn term(&self, t: &Term, env: &[(String, usize)]) -> Result<usize, LogicError> {
        Ok(match t {
            Term::One => 0,
            Term::Var(v) => {
                env.iter().rev().find(|(n, _)| n == v).map(|&(_, x)| x).ok_or_else(|| LogicError::UnboundVariable(v.clone()))?
            }
            Term::Mul(ts) => {
                let mut acc = 0;
                for t in ts {
                    acc = self.table.mul(acc, self.term(t, env)?);
                }
                acc
            }
            Term::Inv(t) => self.table.inv(self.term(t, env)?),
        })
    }

    /// `env` binds free variables; later bindings shadow earlier ones.
    pub fn eval(&mut self, f: &Formula, env: &mut Vec<(String, usize)>) -> Result<bool, LogicError> {
        match f {
            Formula::Eq(a, b) => {
                self.spend()?;
                Ok(self.term(a, env)? == self.term(b, env)?)
            }
            Formula::Not(g) => Ok(!self.eval(g, env)?),
            Formula::And(gs) => {
                for g in gs {
                    if !self.eval(g, env)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Or(gs) => {
                for g in gs {
                    if self.eval(g, env)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                let universal = matches!(f, Formula::Forall(..));
                for x in 0..self.table.order() {
                    self.spend()?;
                    env.push((v.clone(), x));
                    let r = self.eval(g, env);
                    env.pop();
                    if r? != universal {
                        return Ok(!universal);
                    }
                }
                Ok(universal)
            }
        }
    }
}

/// Evaluates `f` with free variables bound by `env`.
pub fn eval_formula(table: &FiniteGroupTable, f: &Formula, env: &[(String, usize)], budget: u64) -> Result<bool, LogicError> {
    if let Some(v) = f.free_vars().into_iter().find(|v| !env.iter().any(|(n, _)| n == v)) {
        return Err(LogicError::UnboundVariable(v));
    }
    let mut env = env.to_vec();
    Evaluator::new(table, budget).eval(f, &mut env)
}
