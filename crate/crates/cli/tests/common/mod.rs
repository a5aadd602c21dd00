//! Command lines whose JSON output is pinned under `tests/golden/`.

pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases = Vec::new();
    let mut add = |name: String, args: Vec<String>| cases.push((name, args));
    for n in 1..=3 {
        let ns = n.to_string();
        add(format!("orbits_n{n}"), vec!["orbits".into(), "--n".into(), ns.clone()]);
        add(format!("stalks_n{n}"), vec!["stalks".into(), "--n".into(), ns.clone()]);
        add(format!("euler_n{n}"), vec!["euler".into(), "--n".into(), ns.clone()]);
        add(format!("ft_table_n{n}"), vec!["ft-table".into(), "--n".into(), ns.clone()]);
        for i in 1..=n {
            add(format!("fano_n{n}_i{i}"), vec!["fano".into(), "--n".into(), ns.clone(), "--i".into(), i.to_string()]);
        }
    }
    add("verify_n3".into(), vec!["verify".into(), "--n-max".into(), "3".into()]);
    add("kostka_21_111".into(), vec!["kostka".into(), "--shape".into(), "2,1".into(), "--weight".into(), "1,1,1".into()]);
    cases
}
