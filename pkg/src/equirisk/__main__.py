from equirisk.cli import main

main()
