//! Named worked examples, built in so that tests and the CLI need no files.

use crate::binfinity::MLTableau;
use crate::tableaux::{Partition, Tableau};

/// Rank of [`example_tableau`] (`sl_6`).
pub const EXAMPLE_RANK: usize = 5;

/// `λ = 2ϖ_1 + 2ϖ_2 + ϖ_4 + ϖ_5`, i.e. the partition `(6,4,2,2,1)`.
pub fn example_lambda() -> Partition {
    Partition::new(vec![6, 4, 2, 2, 1]).unwrap()
}

/// The 15-box tableau `113346 / 2345 / 35 / 56 / 6`.
pub fn example_tableau() -> Tableau {
    Tableau::new(vec![
        vec![1, 1, 3, 3, 4, 6],
        vec![2, 3, 4, 5],
        vec![3, 5],
        vec![5, 6],
        vec![6],
    ])
    .unwrap()
}

/// `T⁺ = ẽ_2³ T` for [`example_tableau`]: `112246 / 2245 / 35 / 56 / 6`.
pub fn example_tableau_raised() -> Tableau {
    Tableau::new(vec![
        vec![1, 1, 2, 2, 4, 6],
        vec![2, 2, 4, 5],
        vec![3, 5],
        vec![5, 6],
        vec![6],
    ])
    .unwrap()
}

/// The marginally large `sl_4` tableau `1111234 / 222 / 34`.
pub fn marginally_large_example() -> MLTableau {
    MLTableau::new(3, vec![vec![2, 3, 4], vec![], vec![4]]).unwrap()
}

/// The `sl_4` tableau `11223 / 233 / 4` used to illustrate `ι_λ`.
pub fn embedding_example() -> Tableau {
    Tableau::new(vec![vec![1, 1, 2, 2, 3], vec![2, 3, 3], vec![4]]).unwrap()
}

/// The marginally large tableau `T_ml` attached to [`embedding_example`]:
/// `111111223 / 22233 / 34`.
pub fn embedding_example_image() -> MLTableau {
    MLTableau::new(3, vec![vec![2, 2, 3], vec![3, 3], vec![4]]).unwrap()
}
