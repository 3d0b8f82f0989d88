# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import sys
import argparse
import logging

from src.utils.config     import Config
from src.utils.constants  import LOGGER_NAME, Preprocessing, System, Task
from src.utils.exceptions import LabError
from src.harness          import COMMANDS, SizeAxis

logger = logging.getLogger(LOGGER_NAME)

def add_common(parser: argparse.ArgumentParser) -> None:
    """Flags shared by every experiment subcommand"""
    parser.add_argument('--task', choices=[t.value for t in Task])
    parser.add_argument('--preprocessing', choices=[p.value for p in Preprocessing])
    parser.add_argument('--system', choices=[s.value for s in System])
    parser.add_argument('--profile', choices=['paper', 'desk'], default='desk')
    parser.add_argument('--seed', type=int, help='Base seed; run i uses seed + i')
    parser.add_argument('--runs', type=int)
    parser.add_argument('--episodes', type=int)
    parser.add_argument('--out', help='Output directory (default: paths.out_dir)')
    parser.add_argument('--dataset', help='Evaluation dataset CSV')
    parser.add_argument('--workers', type=int, help='Worker processes (default: profile setting)')
    parser.add_argument('--config', help='Experiment document (YAML/JSON) mirroring ExperimentConfig')
    parser.add_argument('--step-size', type=float, help='Single step-size instead of the grid')
    parser.add_argument('--plot', action='store_true', help='Also write SVG line plots')

def add_setting(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--beta1', type=float)
    parser.add_argument('--beta2', type=float)
    parser.add_argument('--target-sync', type=int)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Input preprocessing and interference experiments')
    parser.add_argument('--config-file', help='Settings document (default: config/config.yaml)')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='Run one setting for every seed')
    add_common(run)
    add_setting(run)
    run.add_argument('--interference', action='store_true', help='Take interference snapshots (prediction)')

    add_common(sub.add_parser('sweep', help='Sweep the parameter grid and select the best setting'))

    compare = sub.add_parser('compare', help='Compare two preprocessings at their best settings')
    add_common(compare)
    compare.add_argument('--against', required=True, choices=[p.value for p in Preprocessing])

    add_common(sub.add_parser('eval-dataset', help='Build the Mountain Car evaluation dataset'))
    add_common(sub.add_parser('interference', help='Sweep with interference snapshots'))

    net_size = sub.add_parser('net-size-sweep', help='Interference against network size')
    add_common(net_size)
    net_size.add_argument('--axis', choices=[a.value for a in SizeAxis], default=SizeAxis.HIDDEN_UNITS.value)

    response = sub.add_parser('response-map', help='Hidden-unit activations of a trained network')
    add_common(response)
    add_setting(response)
    response.add_argument('--train-episodes', type=int, default=500)
    response.add_argument('--grid', type=int, help='Lattice points per axis')

    ttest = sub.add_parser('ttest', help='t-test on the AUCs of two per-run CSV files')
    ttest.add_argument('a')
    ttest.add_argument('b')
    ttest.add_argument('--welch', action='store_true', help="Welch's unequal-variance test")
    ttest.add_argument('--name', default='ttest')
    ttest.add_argument('--task')
    ttest.add_argument('--system')
    ttest.add_argument('--out')

    plot = sub.add_parser('plot', help='Plot emitted CSV tables as SVG')
    plot.add_argument('tables', nargs='+')
    plot.add_argument('--out')
    return parser

def main(argv=None) -> int:
    """Interference lab command line"""
    args = build_parser().parse_args(argv)
    try:
        Config(args.config_file)
        if args.log_level:
            logger.setLevel(args.log_level)

        logger.info(f"Starting {args.command}")
        return COMMANDS[args.command](args)

    except LabError as e:
        logger.error(f"{args.command} failed: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        return 1
    except Exception as e:
        logger.critical(f"Unexpected error: {str(e)}", exc_info=True)
        raise

if __name__ == "__main__":
    sys.exit(main())
