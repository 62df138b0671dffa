from homophily_gap.cli import main

main()
