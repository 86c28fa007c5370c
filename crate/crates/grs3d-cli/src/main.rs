fn main() {
    let mut args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    if args.is_empty() {
        args.push("grs3d".into());
    }
    std::process::exit(grs3d_cli::run(args));
}
