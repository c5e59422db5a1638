//! A partial skew groupoid ring over a diagonal algebra, compared with the
//! local identities computed from its multiplication.

use grumod::skew::PartialActionSpec;
use grumod::Field;

fn main() -> grumod::Result<()> {
    for (name, spec) in [
        ("global action", PartialActionSpec::global_pair(Field::Rationals, 2)?),
        ("partial action", PartialActionSpec::partial_pair2(Field::Rationals)),
    ] {
        let built = spec.build()?;
        let r = &built.ring;
        println!("{name}: dims {:?}, object unital {}", r.dims(), built.computed.is_object_unital);
        for (s, ok) in built.family_matches() {
            println!("  1_{} from the action agrees with the computed unit: {ok}", r.groupoid().name(s));
        }
    }
    Ok(())
}
