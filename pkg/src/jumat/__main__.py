from jumat.cli import console_main

console_main()
