use solgroup::{build_mh, named_group, presentation_of, F2Matrix, LinSystem};

fn main() {
    // x1 x2 x3 = J, a single equation
    let one = LinSystem::homogeneous(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap());
    print!("{}", presentation_of(&one).to_gap());

    let p = presentation_of(&build_mh(&named_group("A5").unwrap()));
    println!("A5 system: {} generators", p.generator_names(false).len());
    print!("{}", p.to_relator_lines().lines().take(5).map(|l| format!("{l}\n")).collect::<String>());
}
