//! The commuting-involution system of a group. Pass a group name, default A7.
use solgroup::group::involutions;
use solgroup::{build_mh, named_group};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A7".into());
    let g = named_group(&name).expect("known group");
    let sys = build_mh(&g);
    println!(
        "{name}: order={} involutions={} equations={} rank={} nullity={}",
        g.order(),
        involutions(&g).members.len(),
        sys.rows(),
        sys.matrix().rank(),
        sys.matrix().nullity()
    );
}
