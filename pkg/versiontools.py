import re
import subprocess,shlex

default_path = './pyPose6D/version.py'
VERSION_LINE = re.compile(r"^__version__\s*=\s*'([^']+)'",re.M)


def get_version(version_path = default_path):
    '''git describe when inside a checkout, the version file otherwise'''
    git_version = get_git_version()
    if git_version is not None:
        print('==> Using git version')
        return git_version
    print('==> Using python version')
    return get_python_version(version_path)


def get_python_version(version_path = default_path):
    with open(version_path,'r') as f:
        match = VERSION_LINE.search(f.read())
    if match is None:
        raise ValueError('No __version__ found in {}'.format(version_path))
    print('==> Got version {} from python.'.format(match.group(1)))
    return match.group(1)


def get_git_version():
    try:
        version = subprocess.check_output(shlex.split('git describe --tags --dirty'),stderr=subprocess.DEVNULL)
    except (subprocess.CalledProcessError,OSError):
        print('==> Could not get git version')
        return None
    version = version.strip().decode('utf-8')
    print('==> Got version {} from git repo.'.format(version))
    return version


def write(version,file=default_path):
    with open(file,'w') as f:
        f.write('__version__ = \'{}\'\n'.format(version))
        f.write('version = \'{}\'\n'.format(version))
    print('==> Updated version to {} in file: {}'.format(version,file))


if __name__ == '__main__':
    import argparse

    parser = argparse.ArgumentParser(description='Versioning Tools')
    parser.add_argument('--update',action='store_true',help='Rewrite pyPose6D/version.py from git describe')
    args = parser.parse_args()

    version = get_version()
    if args.update:
        write(version)
