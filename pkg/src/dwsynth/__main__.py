from dwsynth.cli import main

raise SystemExit(main())
