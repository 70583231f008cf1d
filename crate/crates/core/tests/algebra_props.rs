use fuzzy_homlie::oracle::{random_instance, Family, InstanceParams};
use fuzzy_homlie::{ClosureMode, FieldSpec, HomLieAlgebra, Matrix, Morphism, Subspace, Vector};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = InstanceParams> {
    (
        prop_oneof![Just(2u32), Just(3), Just(5)],
        1usize..=3,
        any::<u64>(),
        prop::sample::select(Family::ALL.to_vec()),
    )
        .prop_map(|(p, dim, seed, family)| {
            let dim = if family == Family::PaperExample { 3 } else { dim };
            InstanceParams {
                p,
                dim,
                flag_depth: dim + 1,
                seed,
                family,
            }
        })
}

fn algebra() -> impl Strategy<Value = HomLieAlgebra> {
    params().prop_map(|p| random_instance(&p).unwrap().0)
}

fn vec_in(a: &HomLieAlgebra) -> impl Strategy<Value = Vector> {
    let f = a.field();
    prop::collection::vec(-4i64..=4, a.dim()).prop_map(move |v| Vector::from_i64(f, &v))
}

fn algebra_with_vectors(count: usize) -> impl Strategy<Value = (HomLieAlgebra, Vec<Vector>)> {
    algebra().prop_flat_map(move |a| {
        let vs = prop::collection::vec(vec_in(&a), count);
        (Just(a), vs)
    })
}

proptest! {
    #[test]
    fn generated_algebras_satisfy_axioms(a in algebra()) {
        prop_assert!(a.check_axioms().valid);
    }

    #[test]
    fn bracket_is_alternating_and_bilinear((a, v) in algebra_with_vectors(3)) {
        let f = a.field();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert!(a.bracket(x, x).unwrap().is_zero());
        let xy = a.bracket(x, y).unwrap();
        let yx = a.bracket(y, x).unwrap();
        prop_assert!(xy.try_add(&yx).unwrap().is_zero());
        let c = f.from_i64(3);
        let lhs = a.bracket(&x.scale(&c).try_add(z).unwrap(), y).unwrap();
        let rhs = xy.scale(&c).try_add(&a.bracket(z, y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.jacobi_defect(x, y, z).unwrap().is_zero());
    }

    #[test]
    fn closures_are_closed((a, seeds) in algebra_with_vectors(2)) {
        let sub = a.closure(seeds.clone(), ClosureMode::Subalgebra).unwrap();
        let ideal = a.closure(seeds.clone(), ClosureMode::Ideal).unwrap();
        prop_assert!(a.is_subalgebra(&sub).unwrap());
        prop_assert!(a.is_ideal(&ideal).unwrap());
        prop_assert!(sub.is_subspace_of(&ideal).unwrap());
        for s in &seeds {
            prop_assert!(sub.contains(s).unwrap());
        }
        prop_assert_eq!(&sub, &a.closure(sub.basis().to_vec(), ClosureMode::Subalgebra).unwrap());
    }

    #[test]
    fn ideals_are_subalgebras((a, gens) in algebra_with_vectors(2)) {
        let s = Subspace::span(a.field(), a.dim(), gens).unwrap();
        if a.is_ideal(&s).unwrap() {
            prop_assert!(a.is_subalgebra(&s).unwrap());
        }
        prop_assert!(a.is_ideal(&Subspace::zero(a.field(), a.dim())).unwrap());
        prop_assert!(a.is_ideal(&Subspace::full(a.field(), a.dim())).unwrap());
    }

    #[test]
    fn direct_sums_are_valid_and_componentwise(
        ((a, u), (b, w)) in (algebra_with_vectors(2), algebra_with_vectors(2))
            .prop_filter("same field", |((a, _), (b, _))| a.field() == b.field())
    ) {
        let sum = HomLieAlgebra::direct_sum(&[&a, &b]).unwrap();
        prop_assert!(sum.check_axioms().valid);
        prop_assert_eq!(sum.dim(), a.dim() + b.dim());
        let x = Vector::concat(&[u[0].clone(), w[0].clone()]).unwrap();
        let y = Vector::concat(&[u[1].clone(), w[1].clone()]).unwrap();
        let expected = Vector::concat(&[a.bracket(&u[0], &u[1]).unwrap(), b.bracket(&w[0], &w[1]).unwrap()]).unwrap();
        prop_assert_eq!(sum.bracket(&x, &y).unwrap(), expected);
        for i in 0..2 {
            prop_assert!(Morphism::inclusion(&[&a, &b], i, &sum).unwrap().is_certified());
            let proj = Morphism::projection(&[&a, &b], i, &sum).unwrap();
            prop_assert!(proj.is_certified() && proj.is_surjective());
        }
    }

    #[test]
    fn enumerated_morphisms_preserve_structure(
        (a, b) in (algebra(), algebra())
            .prop_filter("small", |(a, b)| a.field() == b.field()
                && (a.field().order().unwrap() as u128).pow((a.dim() * b.dim()) as u32) <= 729)
    ) {
        let mut count = 0;
        for f in a.morphisms_to(&b, 729).unwrap() {
            count += 1;
            let m = f.matrix();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let (ei, ej) = (Vector::unit(a.field(), a.dim(), i), Vector::unit(a.field(), a.dim(), j));
                    prop_assert_eq!(
                        m.apply(&a.bracket(&ei, &ej).unwrap()).unwrap(),
                        b.bracket(&m.apply(&ei).unwrap(), &m.apply(&ej).unwrap()).unwrap()
                    );
                }
                let ei = Vector::unit(a.field(), a.dim(), i);
                prop_assert_eq!(
                    m.apply(&a.twist(&ei).unwrap()).unwrap(),
                    b.twist(&m.apply(&ei).unwrap()).unwrap()
                );
            }
        }
        // the zero map is always a morphism
        prop_assert!(count >= 1);
    }
}

#[test]
fn abelian_with_identity_twist_is_lie() {
    let f = FieldSpec::Prime(3);
    let a = HomLieAlgebra::abelian(f, Matrix::identity(f, 3)).unwrap();
    assert!(a.check_axioms().valid);
}
