use pz_bench::{example_system, nilpotent_x_part, third_order};
use pz_core::algebra::series_implicit_solve;

#[test]
fn inputs_are_well_formed() {
    assert_eq!(example_system().degree(), 2);
    assert_eq!(nilpotent_x_part().min_degree(), Some(2));
    assert!(series_implicit_solve(&nilpotent_x_part(), 16).is_ok());
    let ode = third_order();
    assert_eq!(ode.order(), 3);
    assert!(ode.is_monic());
}
