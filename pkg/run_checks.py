from causets.cli.main import EXIT_OK, run
import io
import os
import logging

SAMPLE_DIR = 'sample_data'
FAIL_DIR = os.path.join(SAMPLE_DIR, 'fail')


def config_files(folder):
    files = next(os.walk(folder))[2]
    return sorted(os.path.join(folder, f) for f in files if f.endswith('.json'))


def main():
    logging.basicConfig(level=logging.CRITICAL)
    failures = []
    for path in config_files(SAMPLE_DIR):
        status = run(['--config', path], io.StringIO())
        if status != EXIT_OK:
            failures.append((path, f'exit status {status}'))
    # every config under fail/ must end with a non-zero status
    for path in config_files(FAIL_DIR):
        status = run(['--config', path], io.StringIO())
        if status == EXIT_OK:
            failures.append((path, 'passed but should not'))
    print('\n'.join(f'{f} : {e}' for f, e in failures))
    print(f'\nGot {len(failures)} failures while running sample configs')


if __name__ == '__main__':
    main()
