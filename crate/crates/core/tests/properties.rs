mod support;

use support::props::{self, CASES};

macro_rules! property {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                if let Err(e) = props::$name(CASES) {
                    panic!("{e}");
                }
            }
        )*
    };
}

property!(
    mul_commutative_associative,
    mul_grading,
    add_self_is_zero,
    bigrade_components_partition,
    coproduct_tensor_dims,
    coassociativity,
    coproduct_multiplicative,
    counit,
    cartan_consistency,
    q_matches_closed_form,
    q_factorization_independent,
    q_kills_squares,
    q_bigrade,
    sq1_bigrade,
    sq1_squares_to_zero,
    sq1_derivation,
    s_set_symmetry,
);

#[test]
fn every_property_is_listed() {
    assert_eq!(props::ALL.len(), 17);
}
