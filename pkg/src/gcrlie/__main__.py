from gcrlie.cli import main

main()
