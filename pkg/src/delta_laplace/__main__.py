from delta_laplace.cli import main

main()
