//! Exact classification of Legendrian negative torus knots in universally
//! tight lens spaces by their classical invariants.
//!
//! ```
//! use lenslk::{classify, KnotClass, LensSpace, Rational};
//!
//! let l = LensSpace::new(8, 5).unwrap();
//! let r = classify(&l, &KnotClass::new(-3, 7).unwrap()).unwrap();
//! assert_eq!(r.tw_max, Some(-4));
//! assert_eq!(r.tb_max, Some(Rational::new(45, 8).unwrap()));
//! assert_eq!(r.rot_peaks, vec![Rational::new(-7, 4).unwrap()]);
//! ```

pub mod audit;
pub mod error;
pub mod exact;
pub mod farey;
pub mod invariants;
pub mod lens;
pub mod oracle;
pub mod par;
pub mod range;
pub mod report;

pub use error::{Error, Result};
pub use exact::{Mat2, Rational, Slope};
pub use farey::{cf_eval, cf_expand, hop_sequence, HopSequence, NegCF};
pub use invariants::{classify, classify_with, CaseTag, ClassificationReport, ClassifyOptions, Region};
pub use lens::{dual_lens, normalize_lens, transform_knot, KnotClass, LensSpace};
pub use range::{decide_equiv, is_realized, render_range, EquivVerdict, MountainRange};
