//! The symbolic section class: spinor-valued functions built from
//! x_1..x_D, r, u = r + x_D, w = r − x_D and e^{q r}, with exact
//! differentiation, gauge and curvature action, and a canonical form.

mod context;
mod eval;
mod expr;
pub mod poly;
mod ratfn;
mod spinmat;
pub mod text;

pub use context::SectionCtx;
pub use eval::{equal, eval_points, evaluate, scale_argument, scale_argument_projective, Equality, EvalPoint, SectionError};
pub use expr::{Group, SectionExpr};
pub use poly::Poly;
pub use ratfn::RatFn;
pub use spinmat::SpinMat;
pub use text::{terms, to_text, SectionTerm};
