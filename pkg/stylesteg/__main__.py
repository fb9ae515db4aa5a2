from stylesteg.cli import main

main()
