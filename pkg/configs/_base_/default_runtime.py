seed = 0
samples = 1
out_format = 'csv'
log_level = 'INFO'
workers = 0
plot = False
work_dirs = './work_dirs'
