from chronos.cli.ChronosCli import main

main()
