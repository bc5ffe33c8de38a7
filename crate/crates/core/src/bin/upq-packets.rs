fn main() {
    env_logger::init();
    let out = upq_packets::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
