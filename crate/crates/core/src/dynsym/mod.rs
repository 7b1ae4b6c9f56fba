//! Dynamical-symmetry generators and their identity suites.

mod battery;
mod generators;
mod op;
mod report;
mod suites;

pub use battery::{battery, Battery};
pub use generators::{dimension_operator, eta, hamiltonian, Form, GenIndex, Generators};
pub use op::{hat, hat_all, Evaluator, Op, Prim, Substitution};
pub use report::{Checker, Failure, Status, VerificationReport};
pub use suites::{verify_forms, verify_lemma1, verify_lemma2, verify_theorem, Lab, SecondOrder, ORACLE_POINTS};

use alloc::sync::Arc;

use crate::exact::Scalar;
use crate::sections::{scale_argument, scale_argument_projective, SectionCtx, SectionError, SectionExpr};
use crate::spectrum::{energy, level_shift};

/// Hψ − E_I ψ.
pub fn hamiltonian_residual(ctx: &Arc<SectionCtx>, psi: &SectionExpr, level: u32) -> SectionExpr {
    let e = energy(level, ctx.n, &ctx.mu);
    hamiltonian(ctx).apply(psi).sub(&psi.scale_rational(&e))
}

/// Checks Hψ = E_I ψ on one section.
pub fn verify_hamiltonian(lab: &Lab, psi: &SectionExpr, level: u32) -> VerificationReport {
    let mut ck = lab.checker();
    ck.check("H=E", &[level as i64], 0, &hamiltonian_residual(&lab.ctx, psi, level));
    lab.report("hamiltonian", &ck, &Battery { seed: 0, sections: alloc::vec![psi.clone()], labels: alloc::vec![] })
}

/// τψ = λ^{n+1} r^{−1/2} ψ(λx) with λ = I_μ + 1.
pub fn twist(psi: &SectionExpr, level: u32) -> Result<SectionExpr, SectionError> {
    let ctx = psi.ctx();
    let lambda = level_shift(level, ctx.n, &ctx.mu);
    let k = lambda.pow(ctx.n as i32 + 1);
    Ok(scale_argument(psi, &lambda)?.mul_r_half(-1).scale(&Scalar::real(k)))
}

/// Inverse of the twist up to a positive constant: ψ ∝ r^{1/2} ψ̃(x/λ).
pub fn untwist_projective(psi: &SectionExpr, level: u32) -> Result<SectionExpr, SectionError> {
    let ctx = psi.ctx();
    let lambda = level_shift(level, ctx.n, &ctx.mu);
    let (s, _) = scale_argument_projective(psi, &lambda.recip())?;
    Ok(s.mul_r_half(1))
}
