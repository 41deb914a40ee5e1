from causets.cli.main import main

main()
