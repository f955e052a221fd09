from .harness import cli_main

cli_main()
