//! Reference tables shipped with the crate.
//!
//! `TABLE1` lists the canonical weighted 3-spaces whose general
//! anticanonical surface is not quasismooth, one ascending tuple per line.
//! `TABLE2` holds one `key=value` record per tuple, records separated by a
//! blank line:
//!
//! ```text
//! weights=1,5,6,8
//! ambient=1,5,2,4            b_i = hcf(w_i, d)
//! group_order=10             |G| = ∏ d_i / d²
//! f_exponents=20,0,0,0;...   z_i^{d_i} rows, then the pencil monomial
//! omega=0,0,2,1              exponents u_i − 1
//! fibration=-4,0,-2,2        a level-0 monomial of N
//! ```

pub const TABLE1: &str = include_str!("../data/table1.expected");
pub const TABLE2: &str = include_str!("../data/table2.expected");
